import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wiener_lta import (
    DisconnectedGraphError,
    Graph,
    GraphClass,
    GraphParseError,
    InvalidGraphError,
    UnsupportedClassError,
    classify,
    enumerate_trees,
    enumerate_unicyclic,
    format_edge_list,
    make_cycle,
    make_path,
    make_star,
    parse_edge_list,
    random_tree,
    random_unicyclic,
)
from wiener_lta.graph import add_edge, is_connected, prufer_decode


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges().tolist())
    return h


def check_invariants(g):
    adj = g.adjacency
    assert len(adj) == g.n
    for v, nbrs in enumerate(adj):
        assert v not in nbrs
        assert len(set(nbrs)) == len(nbrs)
        assert list(nbrs) == sorted(nbrs)
        for u in nbrs:
            assert v in adj[u]
    assert 2 * g.m == sum(len(a) for a in adj)


class TestParse:
    def test_path(self):
        g = parse_edge_list("0 1\n1 2\n2 3")
        assert (g.n, g.m) == (4, 3)
        assert g == make_path(4)

    def test_empty(self):
        g = parse_edge_list("")
        assert (g.n, g.m) == (0, 0)

    def test_comment_and_triangle(self):
        g = parse_edge_list("0 1\n# comment\n1 2\n2 0")
        assert (g.n, g.m) == (3, 3)
        assert g == make_cycle(3)

    def test_whitespace_and_blank_lines(self):
        g = parse_edge_list("\n  0\t1  \n\n   # indented comment\n1    2\n")
        assert g == make_path(3)

    def test_accepts_line_iterable(self):
        assert parse_edge_list(iter(["0 1\n", "1 2\n"])) == make_path(3)

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("0 1\n1 x", "line 2"),
            ("0 1 2", "tokens"),
            ("0", "tokens"),
            ("-1 2", "malformed"),
            ("1.5 2", "malformed"),
            ("0 0", "self-loop"),
            ("0 1\n1 0", "duplicate"),
            ("0 1\n0 1", "duplicate"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(GraphParseError, match=fragment):
            parse_edge_list(text)

    def test_max_vertex(self):
        with pytest.raises(GraphParseError, match="exceeds"):
            parse_edge_list("0 11", max_vertex=10)
        assert parse_edge_list("0 10", max_vertex=10).n == 11

    def test_default_max_vertex(self):
        with pytest.raises(GraphParseError, match="exceeds"):
            parse_edge_list(f"0 {2**31}")

    def test_parse_error_is_value_error(self):
        with pytest.raises(ValueError):
            parse_edge_list("a b")


class TestGraph:
    def test_from_edges_validation(self):
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(3, [(0, 1), (1, 0)])
        g = Graph.from_edges(3, [(2, 0), (0, 1)])
        assert g.adjacency == ((1, 2), (0,), (0,))

    def test_immutable(self):
        g = make_path(3)
        with pytest.raises(AttributeError):
            g.n = 5
        with pytest.raises(ValueError):
            g.indices[0] = 2

    def test_degrees(self, star4):
        assert star4.degrees().tolist() == [3, 1, 1, 1]

    def test_isolated_vertices_inside_range(self):
        g = Graph.from_edges(4, [(0, 3)])
        assert g.adjacency == ((3,), (), (), (0,))
        check_invariants(g)


class TestClassify:
    def test_path_is_tree(self, p4):
        assert classify(p4) is GraphClass.TREE

    def test_cycle_is_unicyclic(self):
        assert classify(make_cycle(5)) is GraphClass.UNICYCLIC

    def test_two_disjoint_edges(self):
        with pytest.raises(DisconnectedGraphError):
            classify(parse_edge_list("0 1\n2 3"))

    def test_disconnected_with_tree_edge_count(self):
        # triangle plus isolated vertex: m = n - 1 but not a tree
        with pytest.raises(DisconnectedGraphError):
            classify(Graph.from_edges(4, [(0, 1), (1, 2), (2, 0)]))

    def test_bicyclic(self):
        with pytest.raises(UnsupportedClassError):
            classify(parse_edge_list("0 1\n1 2\n2 0\n0 3\n3 1"))

    def test_empty(self):
        with pytest.raises(UnsupportedClassError):
            classify(parse_edge_list(""))

    def test_single_vertex(self):
        assert classify(make_path(1)) is GraphClass.TREE


class TestFamilies:
    def test_path(self):
        assert make_path(2).adjacency == ((1,), (0,))
        assert make_path(1).m == 0

    def test_star(self, star4):
        assert star4.adjacency == ((1, 2, 3), (0,), (0,), (0,))

    def test_cycle(self):
        assert make_cycle(3).adjacency == ((1, 2), (0, 2), (0, 1))
        with pytest.raises(InvalidGraphError):
            make_cycle(2)

    def test_bad_sizes(self):
        with pytest.raises(InvalidGraphError):
            make_path(0)
        with pytest.raises(InvalidGraphError):
            make_star(0)


class TestRandom:
    def test_tiny_trees(self):
        assert random_tree(1, 5).n == 1 and random_tree(1, 5).m == 0
        assert random_tree(2, 5) == make_path(2)

    def test_tree_50(self):
        g = random_tree(50, 7)
        assert g.m == 49 and is_connected(g)
        assert classify(g) is GraphClass.TREE

    def test_deterministic(self):
        assert random_tree(200, 3) == random_tree(200, 3)
        assert random_tree(200, 3) != random_tree(200, 4)
        assert random_unicyclic(200, 3) == random_unicyclic(200, 3)

    def test_unicyclic_triangle(self):
        for seed in range(5):
            assert random_unicyclic(3, seed) == make_cycle(3)

    def test_unicyclic_extends_tree(self):
        g = random_unicyclic(30, 11)
        t = random_tree(30, 11)
        assert set(map(tuple, t.edges().tolist())) < set(map(tuple, g.edges().tolist()))

    @pytest.mark.parametrize("n, seed", [(4, 1), (1000, 9)])
    def test_unicyclic_structure(self, n, seed):
        g = random_unicyclic(n, seed)
        assert g.m == n and is_connected(g)
        assert classify(g) is GraphClass.UNICYCLIC

    @given(st.integers(1, 60), st.integers(0, 2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_random_tree_invariants(self, n, seed):
        g = random_tree(n, seed)
        check_invariants(g)
        assert g.m == n - 1 and classify(g) is GraphClass.TREE

    @given(st.integers(3, 60), st.integers(0, 2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_random_unicyclic_has_one_cycle(self, n, seed):
        g = random_unicyclic(n, seed)
        check_invariants(g)
        cycle_edges = nx.find_cycle(to_nx(g))
        assert len(nx.cycle_basis(to_nx(g))) == 1
        for u, v in cycle_edges:
            h = to_nx(g)
            h.remove_edge(u, v)
            assert nx.is_tree(h)

    def test_prufer_uniformity_small(self):
        # every labeled tree on 4 vertices is reachable and appears with equal frequency
        counts = {}
        for seed in range(3200):
            key = format_edge_list(random_tree(4, seed))
            counts[key] = counts.get(key, 0) + 1
        assert len(counts) == 16
        assert min(counts.values()) > 200 * 0.6

    def test_prufer_decode_known(self):
        # sequence (3, 3, 3, 4) is the standard textbook example on 6 vertices
        assert sorted(prufer_decode([3, 3, 3, 4], 6)) == [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]


class TestEnumeration:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
    def test_counts(self, n, expected):
        assert sum(1 for _ in enumerate_trees(n)) == expected

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_distinct_trees(self, n):
        trees = list(enumerate_trees(n))
        assert len(set(trees)) == n ** (n - 2)
        assert all(nx.is_tree(to_nx(t)) for t in trees)

    def test_count_n8(self):
        assert sum(1 for _ in enumerate_trees(8)) == 262144

    def test_range(self):
        with pytest.raises(ValueError):
            next(enumerate_trees(0))
        with pytest.raises(ValueError):
            next(enumerate_trees(10))

    def test_unicyclic_from_trees(self):
        graphs = list(enumerate_unicyclic(4))
        # 16 trees, each with 6 - 3 = 3 non-edges
        assert len(graphs) == 48
        assert all(classify(g) is GraphClass.UNICYCLIC for g in graphs)
        # 4-vertex unicyclic labeled graphs: 12 with a triangle, 3 four-cycles
        assert len(set(graphs)) == 15

    def test_add_edge(self, p4):
        assert add_edge(p4, 0, 3) == make_cycle(4)


class TestRoundTrip:
    @pytest.mark.parametrize(
        "g",
        [make_path(4), make_star(5), make_cycle(7), random_tree(100, 1), random_unicyclic(80, 2)],
        ids=["path", "star", "cycle", "tree", "unicyclic"],
    )
    def test_roundtrip(self, g):
        again = parse_edge_list(format_edge_list(g))
        assert again.adjacency == g.adjacency

    def test_path_format(self):
        assert format_edge_list(make_path(4)) == "0 1\n1 2\n2 3"

    @given(st.sets(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=40))
    def test_roundtrip_arbitrary(self, pairs):
        edges = {(min(a, b), max(a, b)) for a, b in pairs if a != b}
        text = "\n".join(f"{b} {a}" for a, b in sorted(edges))
        g = parse_edge_list(text)
        check_invariants(g)
        assert parse_edge_list(format_edge_list(g)).adjacency == g.adjacency
        assert set(map(tuple, g.edges().tolist())) == edges
