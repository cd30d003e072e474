"""Terminal Wiener index: distances summed over pairs of pendant vertices.

Same fold as the Wiener index, except that only vertices pendant in the
original graph start with count 1 and the cut-edge weight uses the total
number of pendant vertices instead of ``n``.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, classify
from .strip import StripSchedule, strip
from .distance_sum import _cycle_sum, _fold_counts, check_size


def pendant_counts(g: Graph) -> np.ndarray:
    # pendant status is fixed on the original graph, never re-seeded during stripping
    return (g.degrees() == 1).astype(np.int64)


def terminal_wiener_from_schedule(g: Graph, schedule: StripSchedule) -> int:
    check_size(g.n)
    count = pendant_counts(g)
    nleaf = int(count.sum())
    total = int(_fold_counts(nleaf, schedule.leaves, schedule.parents, count))
    if schedule.cycle.size:
        # cycle vertices have degree >= 2, so their own seed is 0
        total += int(_cycle_sum(count[schedule.cycle]))
    return total


def terminal_wiener(g: Graph) -> int:
    """Sum of ``d(u, v)`` over unordered pendant pairs; 0 with fewer than two pendants."""
    return terminal_wiener_from_schedule(g, strip(g, classify(g)))
