"""Leaf stripping: the removal schedule shared by all three index folds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numba
import numpy as np

from .errors import StripError
from .graph import Graph, GraphClass, classify


class RemovalEvent(NamedTuple):
    leaf: int
    parent: int


@dataclass(frozen=True, eq=False)
class StripSchedule:
    """Removal events as parallel ``leaves``/``parents`` arrays, plus the residual cycle.

    ``cycle`` is empty for trees and lists the cycle vertices in walk order
    for unicyclic graphs.
    """

    leaves: np.ndarray
    parents: np.ndarray
    cycle: np.ndarray

    @property
    def events(self) -> list[RemovalEvent]:
        return [RemovalEvent(a, b) for a, b in zip(self.leaves.tolist(), self.parents.tolist())]

    def __len__(self) -> int:
        return int(self.leaves.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StripSchedule):
            return NotImplemented
        return (
            np.array_equal(self.leaves, other.leaves)
            and np.array_equal(self.parents, other.parents)
            and np.array_equal(self.cycle, other.cycle)
        )


@numba.njit(cache=True)
def _strip_kernel(indptr, indices, shuffle_seed):
    """Returns (leaves, parents, residual degree). ``shuffle_seed < 0`` means LIFO."""
    n = indptr.size - 1
    deg = np.empty(n, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    top = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        if deg[v] == 1:
            stack[top] = v
            top += 1
    leaves = np.empty(max(n - 1, 0), dtype=np.int64)
    parents = np.empty(max(n - 1, 0), dtype=np.int64)
    ne = 0
    if shuffle_seed >= 0:
        np.random.seed(shuffle_seed)
    while top > 0:
        if shuffle_seed >= 0:
            r = np.random.randint(0, top)
            stack[r], stack[top - 1] = stack[top - 1], stack[r]
        top -= 1
        leaf = stack[top]
        deg[leaf] = 0
        for p in range(indptr[leaf], indptr[leaf + 1]):
            nb = indices[p]
            if deg[nb] > 0:
                leaves[ne] = leaf
                parents[ne] = nb
                ne += 1
                deg[nb] -= 1
                if deg[nb] == 1:
                    stack[top] = nb
                    top += 1
                break
    return leaves[:ne], parents[:ne], deg


@numba.njit(cache=True)
def _walk_cycle(indptr, indices, deg):
    """Residual vertices in cyclic order; an empty array for a fully stripped tree.

    Returns a length-1 array holding -1 when the residual is not a single cycle.
    """
    n = indptr.size - 1
    start = -1
    k_expected = 0
    for v in range(n):
        if deg[v] > 0:
            if deg[v] != 2:
                return np.full(1, -1, dtype=np.int64)
            if start < 0:
                start = v
            k_expected += 1
    if start < 0:
        return np.empty(0, dtype=np.int64)
    cycle = np.empty(k_expected, dtype=np.int64)
    prev = -1
    cur = start
    k = 0
    while True:
        if k == k_expected:
            return np.full(1, -1, dtype=np.int64)
        cycle[k] = cur
        k += 1
        nxt = -1
        # adjacency is sorted, so from the start vertex we step to the smaller neighbor
        for p in range(indptr[cur], indptr[cur + 1]):
            nb = indices[p]
            if deg[nb] == 2 and nb != prev:
                nxt = nb
                break
        prev = cur
        cur = nxt
        if cur == start or cur < 0:
            break
    if cur != start or k != k_expected:
        return np.full(1, -1, dtype=np.int64)
    return cycle


def strip(
    g: Graph, graph_class: GraphClass | None = None, *, shuffle_seed: int | None = None
) -> StripSchedule:
    """Peel degree-1 vertices until nothing (tree) or the unique cycle remains.

    Initial leaves are pushed in ascending id and popped LIFO. Passing
    ``shuffle_seed`` pops a uniformly random stacked leaf instead; every index
    fold must give the same answer under any such order.
    """
    if graph_class is None:
        graph_class = classify(g)
    seed = -1 if shuffle_seed is None else int(shuffle_seed)
    leaves, parents, deg = _strip_kernel(g.indptr, g.indices, seed)
    cycle = _walk_cycle(g.indptr, g.indices, deg)
    if cycle.size == 1 and cycle[0] < 0:
        raise StripError("residual after stripping is not a single cycle")
    if graph_class is GraphClass.TREE and cycle.size:
        raise StripError("graph declared a tree but stripping left a cycle")
    if graph_class is GraphClass.UNICYCLIC and cycle.size < 3:
        raise StripError("graph declared unicyclic but stripping left no cycle")
    return StripSchedule(leaves, parents, cycle)
