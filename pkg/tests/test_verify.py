import pytest

from wiener_lta import random_tree
from wiener_lta.graph import GraphClass, classify
from wiener_lta.indices import lta_indices
from wiener_lta.oracles import OracleIndices
from wiener_lta.polarity import wiener_polarity_from_schedule
from wiener_lta.strip import strip
from wiener_lta.terminal import terminal_wiener_from_schedule
from wiener_lta.verify import random_graphs, verification_graphs, verify
from wiener_lta.distance_sum import _tree_phase


def literal_cycle_sum(val):
    """Cycle phase as printed, with ``add = i * val[i]`` overwriting instead of accumulating."""
    k = len(val)
    h = k // 2
    diff = [0] * k
    for i in range(1, h + 1):
        diff[1] += val[i]
    for i in range(2, k):
        diff[i] = diff[i - 1] - val[i - 1] + val[(i + h) % k]
    add = 0
    for i in range(1, h + 1):
        add = i * val[i]
    total = val[0] * add
    for i in range(1, k):
        add = add - diff[i] + h * val[(i + h) % k]
        total += val[i] * add
    if k % 2 == 0:
        total -= sum(h * val[i] * val[i + h] for i in range(h))
    return total


def buggy_indices(g):
    cls = classify(g)
    s = strip(g, cls)
    w, count = _tree_phase(g, s)
    if cls is GraphClass.UNICYCLIC:
        w += literal_cycle_sum(count[s.cycle].tolist())
    return OracleIndices(
        w, terminal_wiener_from_schedule(g, s), wiener_polarity_from_schedule(g, s)
    )


def test_small_pass():
    result = verify(6, instances=50, seed=1)
    assert result.passed
    assert "PASS" in result.summary()


def test_n_max_2():
    result = verify(2, instances=0)
    assert result.passed
    # n = 1 and n = 2 trees
    assert result.checked == 2


def test_rejects_tiny_n_max():
    with pytest.raises(ValueError):
        verify(1)


def test_non_accumulating_add_is_caught():
    result = verify(8, instances=0, compute=buggy_indices)
    assert not result.passed
    m = result.mismatch
    assert m.graph.n <= 5
    assert classify(m.graph) is GraphClass.UNICYCLIC
    assert m.expected.wiener != m.got.wiener
    text = result.summary()
    assert text.startswith("FAIL") and "wiener: expected" in text


def test_literal_cycle_sum_on_c4_plus_pendant():
    # accumulating add gives 12 on the C_4 + pendant profile [2, 1, 1, 1]
    assert literal_cycle_sum([2, 1, 1, 1]) != 12


def test_graph_stream_order_and_count():
    labels = [label for label, _ in verification_graphs(4, 10, 0)]
    # 1 + 1 + 3 + 16 trees, 3 + 48 unicyclic, then 10 random
    assert len(labels) == 1 + 1 + 3 + 3 + 16 + 48 + 10
    assert labels[0] == "exhaustive tree n=1"
    assert labels[-1] == "random unicyclic"


def test_random_graphs_respect_bounds():
    sizes = [g.n for g in random_graphs(200, 10, 300, seed=4)]
    assert min(sizes) >= 10 and max(sizes) <= 300
    assert [g.n for g in random_graphs(5, 10, 300, seed=4)] == sizes[:5]
    assert all(g.m == g.n for g in random_graphs(20, 3, 30, seed=2, unicyclic=True))


def test_lta_indices_matches_public_functions():
    g = random_tree(100, 3)
    from wiener_lta import terminal_wiener, wiener, wiener_polarity

    assert lta_indices(g) == (wiener(g), terminal_wiener(g), wiener_polarity(g))
