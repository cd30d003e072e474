"""Oracle-equivalence sweeps: exhaustive small graphs followed by seeded random ones."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .graph import Graph, enumerate_trees, enumerate_unicyclic, format_edge_list
from .graph import random_tree, random_unicyclic
from .indices import lta_indices
from .oracles import OracleIndices, oracle_indices

EXHAUSTIVE_TREE_MAX = 8
EXHAUSTIVE_UNICYCLIC_MAX = 7

IndexFn = Callable[[Graph], OracleIndices]


@dataclass(frozen=True)
class Mismatch:
    label: str
    graph: Graph
    expected: OracleIndices
    got: OracleIndices

    def describe(self) -> str:
        fields = [
            f"{name}: expected {e}, got {a}"
            for name, e, a in zip(OracleIndices._fields, self.expected, self.got)
            if e != a
        ]
        return f"{self.label} (n={self.graph.n}, m={self.graph.m}): " + "; ".join(fields)


@dataclass(frozen=True)
class VerifyResult:
    checked: int
    mismatch: Mismatch | None = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def summary(self) -> str:
        if self.passed:
            return f"PASS: {self.checked} graphs match the BFS oracle"
        edges = format_edge_list(self.mismatch.graph)
        return f"FAIL after {self.checked} graphs: {self.mismatch.describe()}\n{edges}"


def random_graphs(
    count: int, n_lo: int, n_hi: int, seed: int, unicyclic: bool = False
) -> Iterator[Graph]:
    """``count`` seeded random trees (or unicyclic graphs) with ``n_lo <= n <= n_hi``."""
    rng = np.random.default_rng(seed)
    make = random_unicyclic if unicyclic else random_tree
    for _ in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        yield make(n, int(rng.integers(0, 2**32)))


def verification_graphs(n_max: int, instances: int, seed: int) -> Iterator[tuple[str, Graph]]:
    for n in range(1, min(n_max, EXHAUSTIVE_TREE_MAX) + 1):
        for g in enumerate_trees(n):
            yield f"exhaustive tree n={n}", g
        if n <= EXHAUSTIVE_UNICYCLIC_MAX:
            for g in enumerate_unicyclic(n):
                yield f"exhaustive unicyclic n={n}", g
    trees = instances // 2 if n_max >= 3 else instances
    yield from (("random tree", g) for g in random_graphs(trees, 2, max(n_max, 2), seed))
    if n_max >= 3:
        yield from (
            ("random unicyclic", g)
            for g in random_graphs(instances - trees, 3, n_max, seed + 1, unicyclic=True)
        )


def verify(
    n_max: int,
    instances: int = 100,
    seed: int = 0,
    compute: IndexFn = lta_indices,
    reference: IndexFn = oracle_indices,
) -> VerifyResult:
    """Check ``compute`` against ``reference``; stops at the first disagreement."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    checked = 0
    for label, g in verification_graphs(n_max, instances, seed):
        expected = reference(g)
        got = compute(g)
        checked += 1
        if tuple(got) != tuple(expected):
            return VerifyResult(checked, Mismatch(label, g, expected, OracleIndices(*got)))
    return VerifyResult(checked)
