"""Wiener polarity index: the number of unordered vertex pairs at distance 3."""

from __future__ import annotations

import numba
import numpy as np

from .graph import Graph, GraphClass, classify
from .strip import StripSchedule, strip
from .distance_sum import check_size


@numba.njit(cache=True)
def _polarity_fold(leaves, parents, count1, count2):
    # A distance-3 pair is counted at the last of its three path edges to be
    # peeled; by then both endpoints sit in the depth counts of the two sides.
    total = 0
    for e in range(leaves.size):
        v = leaves[e]
        u = parents[e]
        total += count2[u] + count2[v] + count1[u] * count1[v]
        count1[u] += 1
        count2[u] += count1[v]
    return total


@numba.njit(cache=True)
def _polarity_cycle(count1, count2):
    """Pairs at distance 3 hanging from two distinct cycle positions."""
    k = count1.size
    h = k // 2
    total = 0
    for o in range(1, min(3, h) + 1):
        base = h if (k % 2 == 0 and o == h) else k
        need = 3 - o
        for i in range(base):
            j = (i + o) % k
            for a in range(3):
                b = need - a
                if b < 0 or b > 2:
                    continue
                ca = 1 if a == 0 else (count1[i] if a == 1 else count2[i])
                cb = 1 if b == 0 else (count1[j] if b == 1 else count2[j])
                total += ca * cb
    return total


def depth_counts(g: Graph, schedule: StripSchedule) -> tuple[int, np.ndarray, np.ndarray]:
    """Tree-phase total and the final per-vertex depth-1/depth-2 counts."""
    check_size(g.n)
    count1 = np.zeros(g.n, dtype=np.int64)
    count2 = np.zeros(g.n, dtype=np.int64)
    total = int(_polarity_fold(schedule.leaves, schedule.parents, count1, count2))
    return total, count1, count2


def polarity_tree(g: Graph, schedule: StripSchedule) -> int:
    return depth_counts(g, schedule)[0]


def polarity_cycle_remainder(count1, count2) -> int:
    """Distance-3 pairs whose endpoints hang at distinct cycle positions.

    ``count1[i]``/``count2[i]`` are the numbers of vertices at depth 1 and 2
    below cycle position ``i`` (the position itself is depth 0). Pairs inside
    one hanging tree are already counted by the tree fold.
    """
    c1 = np.ascontiguousarray(count1, dtype=np.int64)
    c2 = np.ascontiguousarray(count2, dtype=np.int64)
    if c1.shape != c2.shape or c1.ndim != 1 or c1.size < 3:
        raise ValueError("need matching depth-count vectors of length k >= 3")
    return int(_polarity_cycle(c1, c2))


def wiener_polarity_from_schedule(g: Graph, schedule: StripSchedule) -> int:
    total, count1, count2 = depth_counts(g, schedule)
    if schedule.cycle.size:
        total += int(_polarity_cycle(count1[schedule.cycle], count2[schedule.cycle]))
    return total


def wiener_polarity(g: Graph) -> int:
    cls = classify(g)
    schedule = strip(g, cls)
    if cls is GraphClass.TREE:
        return polarity_tree(g, schedule)
    return wiener_polarity_from_schedule(g, schedule)
