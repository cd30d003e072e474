"""Undirected simple graphs in CSR form, edge-list I/O, classification and generators."""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator, Sequence

import numba
import numpy as np

from .errors import (
    DisconnectedGraphError,
    GraphParseError,
    InvalidGraphError,
    UnsupportedClassError,
)

DEFAULT_MAX_VERTEX = 2**31 - 1
MAX_ENUMERATION_N = 9


class GraphClass(enum.Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"

    def __str__(self) -> str:
        return self.value


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Adjacency is stored as CSR arrays: the neighbors of ``v`` are
    ``indices[indptr[v]:indptr[v + 1]]``, sorted ascending. Both arrays are
    read-only so instances can be shared freely between threads.
    """

    __slots__ = ("n", "m", "indptr", "indices")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray) -> None:
        indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        indices = np.ascontiguousarray(indices, dtype=np.int64)
        if indptr.shape != (n + 1,) or indptr[0] != 0 or indptr[-1] != indices.size:
            raise InvalidGraphError("inconsistent CSR arrays")
        indptr.flags.writeable = False
        indices.flags.writeable = False
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "m", int(indices.size // 2))
        object.__setattr__(self, "indptr", indptr)
        object.__setattr__(self, "indices", indices)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> Graph:
        """Build a graph, rejecting out-of-range ids, self-loops and duplicate edges."""
        if n < 0:
            raise InvalidGraphError(f"negative vertex count {n}")
        arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InvalidGraphError("edges must be pairs")
        u, v = arr[:, 0], arr[:, 1]
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise InvalidGraphError(f"vertex id out of range 0..{n - 1}")
        if np.any(u == v):
            bad = int(u[np.argmax(u == v)])
            raise InvalidGraphError(f"self-loop at vertex {bad}")
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        keys = lo * n + hi
        if np.unique(keys).size != keys.size:
            raise InvalidGraphError("duplicate edge")
        return cls._from_arrays(n, u, v)

    @classmethod
    def _from_arrays(cls, n: int, u: np.ndarray, v: np.ndarray) -> Graph:
        src = np.concatenate((u, v))
        dst = np.concatenate((v, u))
        order = np.lexsort((dst, src))
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, indptr, dst[order])

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        ip, ix = self.indptr, self.indices
        return tuple(tuple(ix[ip[v] : ip[v + 1]].tolist()) for v in range(self.n))

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degrees(self) -> np.ndarray:
        """Degree vector; ``d[v]`` is the length of ``v``'s adjacency list."""
        return np.diff(self.indptr)

    def edges(self) -> np.ndarray:
        """``(m, 2)`` array of edges with ``u < v``, sorted lexicographically."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        keep = src < self.indices
        return np.column_stack((src[keep], self.indices[keep]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- edge-list I/O ----------------------------------------------------------


def parse_edge_list(text: str | Iterable[str], max_vertex: int = DEFAULT_MAX_VERTEX) -> Graph:
    """Parse the ``u v`` per line format. ``#`` lines and blank lines are skipped.

    ``n`` is one more than the largest id mentioned (0 for an empty list).
    """
    lines = text.splitlines() if isinstance(text, str) else text
    us: list[int] = []
    vs: list[int] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two vertex ids, got {len(parts)} tokens", lineno)
        ids = []
        for tok in parts:
            if not (tok.isascii() and tok.isdigit()):
                raise GraphParseError(f"malformed vertex id {tok!r}", lineno)
            x = int(tok)
            if x > max_vertex:
                raise GraphParseError(f"vertex id {x} exceeds maximum {max_vertex}", lineno)
            ids.append(x)
        u, v = ids
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        us.append(u)
        vs.append(v)
    n = max(max(us), max(vs)) + 1 if us else 0
    return Graph._from_arrays(n, np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64))


def format_edge_list(g: Graph) -> str:
    """Canonical serialization: one ``u v`` line per edge with ``u < v``, sorted."""
    return "\n".join(f"{u} {v}" for u, v in g.edges().tolist())


# -- classification ---------------------------------------------------------


@numba.njit(cache=True)
def _reached_from_zero(indptr, indices):
    n = indptr.size - 1
    seen = np.zeros(n, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    seen[0] = True
    queue[0] = 0
    head, tail = 0, 1
    while head < tail:
        v = queue[head]
        head += 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if not seen[w]:
                seen[w] = True
                queue[tail] = w
                tail += 1
    return tail


def is_connected(g: Graph) -> bool:
    return g.n > 0 and _reached_from_zero(g.indptr, g.indices) == g.n


def classify(g: Graph) -> GraphClass:
    if g.n < 1:
        raise UnsupportedClassError("empty graph")
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph is disconnected (n={g.n}, m={g.m})")
    if g.m == g.n - 1:
        return GraphClass.TREE
    if g.m == g.n:
        return GraphClass.UNICYCLIC
    raise UnsupportedClassError(
        f"graph has m={g.m} > n={g.n}: more than one cycle, leaf stripping does not apply"
    )


# -- closed-form families ---------------------------------------------------


def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidGraphError("path needs n >= 1")
    a = np.arange(n - 1, dtype=np.int64)
    return Graph._from_arrays(n, a, a + 1)


def make_star(n: int) -> Graph:
    if n < 1:
        raise InvalidGraphError("star needs n >= 1")
    leaves = np.arange(1, n, dtype=np.int64)
    return Graph._from_arrays(n, np.zeros_like(leaves), leaves)


def make_cycle(k: int) -> Graph:
    if k < 3:
        raise InvalidGraphError("cycle needs k >= 3")
    a = np.arange(k, dtype=np.int64)
    return Graph._from_arrays(k, a, (a + 1) % k)


# -- random and exhaustive generation -------------------------------------


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``n >= 2`` vertices encoded by ``seq`` (length n-2).

    Linear time: a pointer sweeps upward for the smallest leaf, and a vertex
    that just became a leaf below the pointer is used immediately.
    """
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    ptr = degree.index(1)
    leaf = ptr
    edges = []
    for v in seq:
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def _rng(seed: int | None) -> np.random.Generator:
    # PCG64 via default_rng; fixed seeds give identical graphs across runs.
    return np.random.default_rng(seed)


def _tree_from_rng(n: int, rng: np.random.Generator) -> Graph:
    if n < 1:
        raise InvalidGraphError("tree needs n >= 1")
    if n == 1:
        return Graph._from_arrays(1, np.empty(0, np.int64), np.empty(0, np.int64))
    seq = rng.integers(0, n, size=n - 2).tolist()
    e = np.array(prufer_decode(seq, n), dtype=np.int64)
    return Graph._from_arrays(n, e[:, 0], e[:, 1])


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labeled tree from a random Prüfer sequence."""
    return _tree_from_rng(n, _rng(seed))


def random_unicyclic(n: int, seed: int | None = None) -> Graph:
    """``random_tree(n, seed)`` plus one non-edge chosen uniformly at random."""
    if n < 3:
        raise InvalidGraphError("unicyclic graph needs n >= 3")
    rng = _rng(seed)
    tree = _tree_from_rng(n, rng)
    while True:
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u != v and v not in tree.neighbors(u):
            break
    e = tree.edges()
    return Graph._from_arrays(
        n, np.append(e[:, 0], min(u, v)), np.append(e[:, 1], max(u, v))
    )


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labeled trees on ``n`` vertices, in Prüfer-sequence order."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumerate_trees supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    if n == 1:
        yield _tree_from_rng(1, _rng(0))
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        e = np.array(prufer_decode(seq, n), dtype=np.int64)
        yield Graph._from_arrays(n, e[:, 0], e[:, 1])


def non_edges(g: Graph) -> Iterator[tuple[int, int]]:
    for u in range(g.n):
        nbrs = set(g.neighbors(u).tolist())
        for v in range(u + 1, g.n):
            if v not in nbrs:
                yield u, v


def add_edge(g: Graph, u: int, v: int) -> Graph:
    e = g.edges()
    return Graph.from_edges(g.n, np.vstack((e, [[u, v]])))


def enumerate_unicyclic(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices plus each of its non-edges (with repeats)."""
    if n < 3:
        return
    for tree in enumerate_trees(n):
        e = tree.edges()
        for u, v in non_edges(tree):
            yield Graph._from_arrays(n, np.append(e[:, 0], u), np.append(e[:, 1], v))
