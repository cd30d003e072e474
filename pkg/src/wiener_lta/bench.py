"""Timing harness comparing leaf stripping with the BFS and matrix APSP baselines.

Each cell (algorithm, n) is the median over ``trials`` seeded random graphs.
A trial repeats the call until ``min_trial_ns`` has elapsed and records the
per-call time, so microsecond-scale cells are not dominated by timer jitter.
Graph generation happens outside the timed region.
"""

from __future__ import annotations

import csv
import datetime as _dt
import gc
import io
import os
import platform
import statistics
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numba
import numpy as np

from .errors import InsufficientDataError
from .graph import Graph, random_tree, random_unicyclic
from .indices import BFS_MAX_N, MATRIX_MAX_N
from .oracles import (
    _bfs_index_sums,
    _faster_all_pairs,
    _floyd_warshall,
    _slow_all_pairs,
    _weight_matrix,
)
from .distance_sum import MAX_N, _lta_wiener_kernel

ALGORITHMS = ("SAP", "FAP", "FW", "BFS", "LTA")
CAPS = {"SAP": MATRIX_MAX_N, "FAP": MATRIX_MAX_N, "FW": MATRIX_MAX_N, "BFS": BFS_MAX_N, "LTA": MAX_N}
CSV_COLUMNS = ("algorithm", "n", "trials", "median_ms", "min_ms", "max_ms", "seed")
MIN_TRIALS = 3
DEFAULT_SIZES = (10, 20, 50, 100, 1000)


def _matrix_wiener(kernel: Callable[[np.ndarray], np.ndarray], g: Graph) -> int:
    return int(np.triu(kernel(_weight_matrix(g)), k=1).sum(dtype=np.int64))


def wiener_callable(algorithm: str, g: Graph) -> Callable[[], int]:
    """A zero-argument callable computing W(g) with ``algorithm`` (inputs pre-built)."""
    if algorithm == "LTA":
        return lambda: _lta_wiener_kernel(g.indptr, g.indices)
    if algorithm == "BFS":
        no_pendants = np.zeros(g.n, dtype=np.bool_)
        return lambda: _bfs_index_sums(g.indptr, g.indices, no_pendants)[0]
    kernel = {"SAP": _slow_all_pairs, "FAP": _faster_all_pairs, "FW": _floyd_warshall}[algorithm]
    return lambda: _matrix_wiener(kernel, g)


@dataclass(frozen=True)
class BenchCell:
    algorithm: str
    n: int
    trials: int
    median_ms: float | None
    min_ms: float | None
    max_ms: float | None
    seed: int
    seeds: tuple[int, ...] = ()
    skipped: str | None = None


@dataclass
class BenchReport:
    cells: list[BenchCell]
    timestamp: str
    config: dict = field(default_factory=dict)

    def cell(self, algorithm: str, n: int) -> BenchCell | None:
        for c in self.cells:
            if c.algorithm == algorithm and c.n == n:
                return c
        return None

    def median(self, algorithm: str, n: int) -> float | None:
        c = self.cell(algorithm, n)
        return None if c is None else c.median_ms

    @property
    def sizes(self) -> list[int]:
        return sorted({c.n for c in self.cells})

    @property
    def algorithms(self) -> list[str]:
        present = {c.algorithm for c in self.cells}
        return [a for a in ALGORITHMS if a in present]

    def ordering(self, n: int) -> list[str]:
        """Measured algorithms at ``n``, slowest first."""
        timed = [c for c in self.cells if c.n == n and c.median_ms is not None]
        return [c.algorithm for c in sorted(timed, key=lambda c: -c.median_ms)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for c in self.cells:
            if c.skipped:
                w.writerow([c.algorithm, c.n, 0, "skipped", "", "", c.seed])
            else:
                w.writerow(
                    [c.algorithm, c.n, c.trials, f"{c.median_ms:.6g}", f"{c.min_ms:.6g}",
                     f"{c.max_ms:.6g}", c.seed]
                )
        return buf.getvalue()

    def to_markdown(self) -> str:
        algs = self.algorithms
        lines = [
            "| n | " + " | ".join(algs) + " |",
            "|---|" + "---|" * len(algs),
        ]
        for n in self.sizes:
            row = []
            for a in algs:
                m = self.median(a, n)
                row.append("" if m is None else f"{m:.6g}")
            lines.append(f"| {n} | " + " | ".join(row) + " |")
        lines.append("")
        lines.append(
            f"Median wall time in milliseconds; {self.config.get('trials')} trials per cell, "
            f"seeds from {self.config.get('seed')}, "
            f"{'unicyclic' if self.config.get('unicyclic') else 'tree'} inputs. "
            "Blank cells were not run (size cap)."
        )
        return "\n".join(lines) + "\n"

    def write(self, out_dir: str | os.PathLike) -> tuple[Path, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        csv_path = out / "bench.csv"
        md_path = out / "bench.md"
        csv_path.write_text(self.to_csv(), encoding="utf-8")
        md_path.write_text(self.to_markdown(), encoding="utf-8")
        return csv_path, md_path


def time_call(fn: Callable[[], object], min_ns: int) -> float:
    """Per-call nanoseconds, doubling the repeat count until ``min_ns`` has elapsed."""
    number = 1
    while True:
        start = time.perf_counter_ns()
        for _ in range(number):
            fn()
        elapsed = time.perf_counter_ns() - start
        if elapsed >= min_ns:
            return elapsed / number
        number *= 2


def _pin_to_one_cpu() -> set[int] | None:
    if not hasattr(os, "sched_getaffinity"):
        return None
    try:
        before = os.sched_getaffinity(0)
        os.sched_setaffinity(0, {min(before)})
        return before
    except OSError:
        return None


def run_bench(
    sizes: Iterable[int] = DEFAULT_SIZES,
    algorithms: Sequence[str] = ALGORITHMS,
    trials: int = 5,
    seed: int = 0,
    *,
    unicyclic: bool = False,
    min_trial_ns: int = 5_000_000,
) -> BenchReport:
    sizes = list(sizes)
    algorithms = [a.upper() for a in algorithms]
    unknown = set(algorithms) - set(ALGORITHMS)
    if unknown:
        raise ValueError(f"unknown algorithms: {sorted(unknown)}")
    if not algorithms:
        raise ValueError("no algorithms selected")
    if trials < MIN_TRIALS:
        raise ValueError(f"need at least {MIN_TRIALS} trials per cell")
    if any(n < (3 if unicyclic else 1) for n in sizes):
        raise ValueError("sizes too small for the graph family")
    make = random_unicyclic if unicyclic else random_tree

    # compile every kernel before anything is timed
    warm = make(8, 0)
    for a in algorithms:
        wiener_callable(a, warm)()

    seeds = tuple(seed + i for i in range(trials))
    cells: list[BenchCell] = []
    previous = _pin_to_one_cpu()
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for n in sizes:
            graphs = None
            for a in algorithms:
                if n > CAPS[a]:
                    cells.append(
                        BenchCell(a, n, 0, None, None, None, seed, seeds,
                                  skipped=f"n > {CAPS[a]}")
                    )
                    continue
                if graphs is None:
                    graphs = [make(n, s) for s in seeds]
                per_call = [time_call(wiener_callable(a, g), min_trial_ns) for g in graphs]
                ms = [t / 1e6 for t in per_call]
                cells.append(
                    BenchCell(a, n, trials, statistics.median(ms), min(ms), max(ms), seed, seeds)
                )
    finally:
        if gc_was_enabled:
            gc.enable()
        if previous is not None:
            os.sched_setaffinity(0, previous)

    config = {
        "sizes": sizes,
        "algorithms": algorithms,
        "trials": trials,
        "seed": seed,
        "unicyclic": unicyclic,
        "min_trial_ns": min_trial_ns,
        "python": platform.python_version(),
        "numba": numba.__version__,
        "numpy": np.__version__,
        "machine": platform.machine(),
    }
    stamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return BenchReport(cells, stamp, config)


@dataclass(frozen=True)
class ScalingVerdict:
    algorithm: str
    n_small: int
    n_large: int
    ratio: float
    max_ratio: float

    @property
    def passed(self) -> bool:
        return self.ratio <= self.max_ratio


def check_linear_scaling(
    report: BenchReport, algorithm: str = "LTA", max_ratio: float = 30.0
) -> ScalingVerdict:
    """Compare medians at ``n`` and ``10n`` (largest such pair in the report)."""
    timed = {c.n: c.median_ms for c in report.cells
             if c.algorithm == algorithm and c.median_ms is not None}
    pairs = [n for n in timed if 10 * n in timed]
    if not pairs:
        raise InsufficientDataError(f"report has no {algorithm} medians at both n and 10n")
    n = max(pairs)
    return ScalingVerdict(algorithm, n, 10 * n, timed[10 * n] / timed[n], max_ratio)


def report_dict(report: BenchReport) -> dict:
    return {"timestamp": report.timestamp, "config": report.config,
            "cells": [asdict(c) for c in report.cells]}
