"""Wiener index of trees and unicyclic graphs in linear time.

Tree edges are cut edges: when a leaf with accumulated count ``c`` is peeled,
its edge lies on ``c * (n - c)`` shortest paths. For a unicyclic graph the
residual cycle positions carry the counts of their hanging trees, and the
cross-position distances are summed with a sliding half-cycle window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numba
import numpy as np

from .errors import IndexOverflowError
from .graph import Graph, GraphClass, classify
from .strip import StripSchedule, _walk_cycle, strip

# W(G) <= W(P_n) = n(n^2-1)/6 < 2**63 for every connected graph with n <= MAX_N,
# and every partial sum below is bounded by the final value.
MAX_N = 3_000_000
_INT64_MAX = 2**63 - 1


def check_size(n: int) -> None:
    if n > MAX_N:
        raise IndexOverflowError(
            f"n={n} exceeds {MAX_N}; the index may not fit in a signed 64-bit integer"
        )


@dataclass(frozen=True, eq=False)
class CycleProfile:
    """Per-position counts around the residual cycle, in walk order."""

    val: np.ndarray

    def __post_init__(self) -> None:
        val = np.ascontiguousarray(self.val, dtype=np.int64)
        if val.ndim != 1 or val.size < 3:
            raise ValueError("cycle profile needs k >= 3 positions")
        if np.any(val < 0):
            raise ValueError("cycle counts must be non-negative")
        object.__setattr__(self, "val", val)

    @classmethod
    def of(cls, values: Sequence[int]) -> CycleProfile:
        return cls(np.asarray(values, dtype=np.int64))

    @property
    def k(self) -> int:
        return int(self.val.size)


class CycleSumState(NamedTuple):
    """Window sums seen from one cycle position.

    ``add`` is sum of ``t * c[i+t]`` and ``diff`` is sum of ``c[i+t]``, for
    ``t = 1..k//2`` (indices mod k).
    """

    add: int
    diff: int


@numba.njit(cache=True)
def _fold_counts(total_weight, leaves, parents, count):
    """Sum of count[leaf] * (total_weight - count[leaf]) over events; merges count in place."""
    total = 0
    for e in range(leaves.size):
        c = count[leaves[e]]
        total += c * (total_weight - c)
        count[parents[e]] += c
    return total


@numba.njit(cache=True)
def _window_sums(val):
    k = val.size
    h = k // 2
    add = np.empty(k, dtype=np.int64)
    diff = np.empty(k, dtype=np.int64)
    s = 0
    d = 0
    for t in range(1, h + 1):
        s += t * val[t]
        d += val[t]
    add[0] = s
    diff[0] = d
    for i in range(k - 1):
        # the window slides from i+1..i+h to i+2..i+h+1: every distance drops by one,
        # position i+1 leaves and position i+h+1 enters at distance h
        entering = val[(i + h + 1) % k]
        s = s - d + h * entering
        d = d - val[i + 1] + entering
        add[i + 1] = s
        diff[i + 1] = d
    return add, diff


@numba.njit(cache=True)
def _cycle_sum(val):
    k = val.size
    h = k // 2
    add, _ = _window_sums(val)
    total = 0
    even = k % 2 == 0
    for i in range(k):
        w = add[i]
        if even and i < h:
            # antipodal pair (i, i+h) is inside both windows; charge it to the upper
            # position only, so the running total never exceeds the final value
            w -= h * val[i + h]
        total += val[i] * w
    return total


_LANES = 8


@numba.njit(cache=True)
def _lta_wiener_kernel(indptr, indices):
    """Strip, fold and close the cycle in one compiled pass (benchmark path).

    Each vertex keeps the XOR of its live neighbours, so a removed leaf finds
    its parent without rescanning adjacency. Several leaf chains are peeled in
    round-robin so their cache misses overlap. W does not depend on removal
    order.
    """
    n = indptr.size - 1
    state = np.empty((n, 3), dtype=np.int64)  # deg, count, xor of live neighbours
    for v in range(n):
        x = 0
        for p in range(indptr[v], indptr[v + 1]):
            x ^= indices[p]
        state[v, 0] = indptr[v + 1] - indptr[v]
        state[v, 1] = 1
        state[v, 2] = x
    total = 0
    lane = np.full(_LANES, -1, dtype=np.int64)
    scan = 0
    busy = True
    while busy:
        busy = False
        for j in range(_LANES):
            leaf = lane[j]
            if leaf < 0 or state[leaf, 0] != 1:
                # chain ended; pick up the next untouched leaf
                leaf = -1
                while scan < n:
                    scan += 1
                    if state[scan - 1, 0] == 1:
                        leaf = scan - 1
                        break
                lane[j] = leaf
                if leaf < 0:
                    continue
            busy = True
            state[leaf, 0] = 0
            c = state[leaf, 1]
            nb = state[leaf, 2]
            total += c * (n - c)
            state[nb, 1] += c
            state[nb, 2] ^= leaf
            state[nb, 0] -= 1
            lane[j] = nb
    cycle = _walk_cycle(indptr, indices, np.ascontiguousarray(state[:, 0]))
    if cycle.size >= 3:
        total += _cycle_sum(state[:, 1][cycle])
    return total


def window_states(profile: CycleProfile) -> list[CycleSumState]:
    add, diff = _window_sums(profile.val)
    return [CycleSumState(a, d) for a, d in zip(add.tolist(), diff.tolist())]


def cycle_distance_sum(profile: CycleProfile) -> int:
    """Sum of ``c_i * c_j * dcyc(i, j)`` over unordered position pairs, in O(k)."""
    s = int(profile.val.sum())
    if (profile.k // 2) * s * s > _INT64_MAX:
        raise IndexOverflowError("cycle distance sum may exceed 64 bits")
    return int(_cycle_sum(profile.val))


def cut_edge_contributions(g: Graph, schedule: StripSchedule) -> np.ndarray:
    """``count[leaf] * (n - count[leaf])`` for each event, in schedule order."""
    count = np.ones(g.n, dtype=np.int64)
    out = np.empty(len(schedule), dtype=np.int64)
    for e, (leaf, parent) in enumerate(zip(schedule.leaves.tolist(), schedule.parents.tolist())):
        c = count[leaf]
        out[e] = c * (g.n - c)
        count[parent] += c
    return out


def _tree_phase(g: Graph, schedule: StripSchedule) -> tuple[int, np.ndarray]:
    check_size(g.n)
    count = np.ones(g.n, dtype=np.int64)
    total = _fold_counts(g.n, schedule.leaves, schedule.parents, count)
    return int(total), count


def wiener_tree(g: Graph, schedule: StripSchedule) -> int:
    if schedule.cycle.size:
        raise ValueError("schedule has a residual cycle; use wiener_unicyclic")
    return _tree_phase(g, schedule)[0]


def wiener_unicyclic(g: Graph, schedule: StripSchedule) -> int:
    if schedule.cycle.size < 3:
        raise ValueError("schedule has no residual cycle; use wiener_tree")
    total, count = _tree_phase(g, schedule)
    return total + int(_cycle_sum(count[schedule.cycle]))


def cycle_profile(g: Graph, schedule: StripSchedule) -> CycleProfile:
    """Profile of subtree sizes at each cycle position after the tree phase."""
    _, count = _tree_phase(g, schedule)
    return CycleProfile(count[schedule.cycle])


def wiener(g: Graph) -> int:
    """Sum of distances over all unordered vertex pairs."""
    check_size(g.n)
    cls = classify(g)
    schedule = strip(g, cls)
    if cls is GraphClass.TREE:
        return wiener_tree(g, schedule)
    return wiener_unicyclic(g, schedule)
