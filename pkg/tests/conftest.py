import pytest

from wiener_lta import make_cycle, make_path, make_star, parse_edge_list

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


@pytest.fixture
def p4():
    return make_path(4)


@pytest.fixture
def star4():
    return make_star(4)


@pytest.fixture
def triangle_pendant():
    return parse_edge_list("0 1\n1 2\n2 0\n0 3")


@pytest.fixture
def c4_pendant():
    return parse_edge_list("0 1\n1 2\n2 3\n3 0\n0 4")


@pytest.fixture
def c6():
    return make_cycle(6)
