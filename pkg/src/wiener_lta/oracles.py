"""Exact reference computations and the classical all-pairs shortest-path baselines.

Everything here works from explicit distances, so it is independent of the
leaf-stripping code it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numba
import numpy as np

from .errors import DisconnectedGraphError
from .graph import Graph

UNREACHABLE = -1


class OracleIndices(NamedTuple):
    wiener: int
    terminal_wiener: int
    wiener_polarity: int


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Hop distances; unreachable pairs hold ``UNREACHABLE``."""

    dist: np.ndarray

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self.dist, other.dist)

    @property
    def connected(self) -> bool:
        return not np.any(self.dist == UNREACHABLE)


# -- BFS --------------------------------------------------------------------


@numba.njit(cache=True)
def _bfs_fill(indptr, indices, source, dist, queue):
    dist[:] = -1
    dist[source] = 0
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if dist[w] < 0:
                dist[w] = dv
                queue[tail] = w
                tail += 1
    return tail


@numba.njit(cache=True)
def _bfs_source_sums(indptr, indices, pendant, s, dist, queue):
    n = indptr.size - 1
    reached = _bfs_fill(indptr, indices, s, dist, queue)
    w = 0
    tw = 0
    wp = 0
    for t in range(s + 1, n):
        d = dist[t]
        w += d
        if pendant[s] and pendant[t]:
            tw += d
        if d == 3:
            wp += 1
    return reached, w, tw, wp


@numba.njit(cache=True)
def _bfs_index_sums(indptr, indices, pendant):
    """(W, TW, WP, all_reached) from one BFS per source, counting pairs s < t."""
    n = indptr.size - 1
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    w = 0
    tw = 0
    wp = 0
    for s in range(n):
        reached, a, b, c = _bfs_source_sums(indptr, indices, pendant, s, dist, queue)
        if reached != n:
            return 0, 0, 0, False
        w += a
        tw += b
        wp += c
    return w, tw, wp, True


@numba.njit(cache=True, parallel=True)
def _bfs_index_sums_parallel(indptr, indices, pendant):
    n = indptr.size - 1
    w = 0
    tw = 0
    wp = 0
    missing = 0
    for s in numba.prange(n):
        dist = np.empty(n, dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        reached, a, b, c = _bfs_source_sums(indptr, indices, pendant, s, dist, queue)
        missing += n - reached
        w += a
        tw += b
        wp += c
    return w, tw, wp, missing == 0


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    dist = np.empty(g.n, dtype=np.int64)
    _bfs_fill(g.indptr, g.indices, source, dist, np.empty(g.n, dtype=np.int64))
    return dist


def bfs_all_pairs(g: Graph) -> DistanceMatrix:
    out = np.empty((g.n, g.n), dtype=np.int64)
    queue = np.empty(g.n, dtype=np.int64)
    for s in range(g.n):
        _bfs_fill(g.indptr, g.indices, s, out[s], queue)
    return DistanceMatrix(out)


def oracle_indices(g: Graph, parallel: bool = False) -> OracleIndices:
    """All three indices straight from their definitions, via ``n`` BFS runs."""
    if g.n == 0:
        return OracleIndices(0, 0, 0)
    pendant = g.degrees() == 1
    kernel = _bfs_index_sums_parallel if parallel else _bfs_index_sums
    w, tw, wp, ok = kernel(g.indptr, g.indices, pendant)
    if not ok:
        raise DisconnectedGraphError("graph is disconnected")
    return OracleIndices(int(w), int(tw), int(wp))


def oracle_wiener(g: Graph) -> int:
    return oracle_indices(g).wiener


def oracle_terminal(g: Graph) -> int:
    return oracle_indices(g).terminal_wiener


def oracle_polarity(g: Graph) -> int:
    return oracle_indices(g).wiener_polarity


def indices_from_distances(dm: DistanceMatrix, degrees: np.ndarray) -> OracleIndices:
    if not dm.connected:
        raise DisconnectedGraphError("graph is disconnected")
    upper = np.triu(dm.dist, k=1)
    pendant = np.flatnonzero(degrees == 1)
    tw = int(np.triu(dm.dist[np.ix_(pendant, pendant)], k=1).sum())
    wp = int(np.count_nonzero(upper == 3))
    return OracleIndices(int(upper.sum()), tw, wp)


# -- matrix APSP ------------------------------------------------------------
# Distances are int32 with "infinity" = n, which exceeds every finite hop count.
# A sum of two entries is at most 2n and min() never lets an entry exceed n.


def _weight_matrix(g: Graph) -> np.ndarray:
    n = g.n
    w = np.full((n, n), n, dtype=np.int32)
    np.fill_diagonal(w, 0)
    src = np.repeat(np.arange(n), g.degrees())
    w[src, g.indices] = 1
    return w


def _to_distance_matrix(d: np.ndarray) -> DistanceMatrix:
    n = d.shape[0]
    out = d.astype(np.int64)
    out[out >= n] = UNREACHABLE
    return DistanceMatrix(out)


@numba.njit(cache=True)
def _min_plus(a, b, inf):
    n = a.shape[0]
    out = np.full((n, n), inf, dtype=np.int32)
    for i in range(n):
        row = out[i]
        for k in range(n):
            aik = a[i, k]
            if aik >= inf:
                continue
            bk = b[k]
            for j in range(n):
                c = aik + bk[j]
                if c < row[j]:
                    row[j] = c
    return out


@numba.njit(cache=True)
def _slow_all_pairs(w):
    n = w.shape[0]
    cur = w.copy()
    m = 1
    while m < n - 1:
        nxt = _min_plus(cur, w, n)
        m += 1
        if np.array_equal(nxt, cur):
            break
        cur = nxt
    return cur


@numba.njit(cache=True)
def _faster_all_pairs(w):
    n = w.shape[0]
    cur = w.copy()
    m = 1
    while m < n - 1:
        cur = _min_plus(cur, cur, n)
        m *= 2
    return cur


@numba.njit(cache=True)
def _floyd_warshall(d):
    n = d.shape[0]
    for k in range(n):
        dk = d[k].copy()
        for i in range(n):
            # no skip on infinite d[i, k]: the cost stays n^3 regardless of sparsity
            dik = d[i, k]
            row = d[i]
            for j in range(n):
                c = dik + dk[j]
                if c < row[j]:
                    row[j] = c
    return d


def floyd_warshall(g: Graph) -> DistanceMatrix:
    return _to_distance_matrix(_floyd_warshall(_weight_matrix(g)))


def sap_distances(g: Graph) -> DistanceMatrix:
    """Repeated min-plus extension by the weight matrix.

    Stops early once an extension changes nothing (the matrix has then
    converged); the worst case, a path, still takes n-2 extensions.
    """
    return _to_distance_matrix(_slow_all_pairs(_weight_matrix(g)))


def fap_distances(g: Graph) -> DistanceMatrix:
    """Repeated min-plus squaring, ceil(log2(n-1)) products."""
    return _to_distance_matrix(_faster_all_pairs(_weight_matrix(g)))
