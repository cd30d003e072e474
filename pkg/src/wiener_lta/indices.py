"""All three indices in one call, by leaf stripping or by a named distance oracle."""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass

from .errors import GuardrailError
from .graph import Graph, GraphClass, classify
from .oracles import (
    OracleIndices,
    fap_distances,
    floyd_warshall,
    indices_from_distances,
    oracle_indices,
    sap_distances,
)
from .polarity import wiener_polarity_from_schedule
from .strip import strip
from .terminal import terminal_wiener_from_schedule
from .distance_sum import check_size, wiener_tree, wiener_unicyclic

BFS_MAX_N = 20_000
MATRIX_MAX_N = 1_500


class Algorithm(str, enum.Enum):
    LTA = "lta"
    BFS = "bfs"
    FW = "fw"
    SAP = "sap"
    FAP = "fap"

    def __str__(self) -> str:
        return self.value


SIZE_CAPS = {
    Algorithm.BFS: BFS_MAX_N,
    Algorithm.FW: MATRIX_MAX_N,
    Algorithm.SAP: MATRIX_MAX_N,
    Algorithm.FAP: MATRIX_MAX_N,
}


def check_guardrail(algorithm: Algorithm, n: int) -> None:
    cap = SIZE_CAPS.get(algorithm)
    if cap is not None and n > cap:
        raise GuardrailError(f"{algorithm.value} is limited to n <= {cap} (got n={n})")


@dataclass(frozen=True)
class IndexReport:
    n: int
    m: int
    graph_class: GraphClass
    wiener: int
    terminal_wiener: int
    wiener_polarity: int
    algorithm: Algorithm
    elapsed_ns: int

    def as_dict(self) -> dict:
        # key order is part of the output contract
        return {
            "n": self.n,
            "m": self.m,
            "class": self.graph_class.value,
            "wiener": self.wiener,
            "terminal_wiener": self.terminal_wiener,
            "wiener_polarity": self.wiener_polarity,
            "algorithm": self.algorithm.value,
            "elapsed_ns": self.elapsed_ns,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))

    def to_text(self) -> str:
        return "\n".join(f"{k}: {v}" for k, v in self.as_dict().items())


def lta_indices(g: Graph, graph_class: GraphClass | None = None) -> OracleIndices:
    """W, TW and WP from a single strip schedule."""
    check_size(g.n)
    if graph_class is None:
        graph_class = classify(g)
    schedule = strip(g, graph_class)
    if graph_class is GraphClass.TREE:
        w = wiener_tree(g, schedule)
    else:
        w = wiener_unicyclic(g, schedule)
    return OracleIndices(
        w,
        terminal_wiener_from_schedule(g, schedule),
        wiener_polarity_from_schedule(g, schedule),
    )


_MATRIX_ORACLES = {
    Algorithm.FW: floyd_warshall,
    Algorithm.SAP: sap_distances,
    Algorithm.FAP: fap_distances,
}


def compute_indices(
    g: Graph, algorithm: Algorithm | str = Algorithm.LTA, *, parallel_oracle: bool = False
) -> IndexReport:
    algorithm = Algorithm(algorithm)
    graph_class = classify(g)
    check_guardrail(algorithm, g.n)
    start = time.perf_counter_ns()
    if algorithm is Algorithm.LTA:
        values = lta_indices(g, graph_class)
    elif algorithm is Algorithm.BFS:
        values = oracle_indices(g, parallel=parallel_oracle)
    else:
        values = indices_from_distances(_MATRIX_ORACLES[algorithm](g), g.degrees())
    elapsed = time.perf_counter_ns() - start
    return IndexReport(
        n=g.n,
        m=g.m,
        graph_class=graph_class,
        wiener=values.wiener,
        terminal_wiener=values.terminal_wiener,
        wiener_polarity=values.wiener_polarity,
        algorithm=algorithm,
        elapsed_ns=elapsed,
    )
