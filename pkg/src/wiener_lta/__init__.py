"""Linear-time Wiener, terminal Wiener and Wiener polarity indices of trees and unicyclic graphs."""

from .errors import (
    DisconnectedGraphError,
    GraphParseError,
    GuardrailError,
    IndexOverflowError,
    InsufficientDataError,
    InvalidGraphError,
    StripError,
    UnsupportedClassError,
    WienerError,
)
from .graph import (
    Graph,
    GraphClass,
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
from .indices import Algorithm, IndexReport, compute_indices, lta_indices
from .oracles import (
    DistanceMatrix,
    bfs_distances,
    fap_distances,
    floyd_warshall,
    oracle_indices,
    oracle_polarity,
    oracle_terminal,
    oracle_wiener,
    sap_distances,
)
from .polarity import polarity_cycle_remainder, polarity_tree, wiener_polarity
from .strip import RemovalEvent, StripSchedule, strip
from .terminal import terminal_wiener
from .distance_sum import CycleProfile, cycle_distance_sum, wiener, wiener_tree, wiener_unicyclic

__version__ = "0.1.0"
