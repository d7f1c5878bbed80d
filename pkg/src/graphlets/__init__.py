"""Exact parallel graphlet decomposition for sparse graphs.

Counts all connected and disconnected induced graphlets on 2, 3 and 4 nodes
by enumerating only triangles, 2-stars, 4-cliques and 4-cycles per edge and
deriving every other class in constant time, plus analytics (GFD, feature
vectors, edge ranking), incremental selection updates, a CLI and an HTTP
service.
"""

from .classes import ALL_CLASSES, CLASS_BY_ID, CLASS_IDS, GraphletClass, \
    classes_for, complement_class
from .census import (
    EdgeLocalCounts, MicroCounts, UnrestrictedCounts, clear_marks,
    clique_count, close_quads, close_triads, cycle_count,
    edge_neighborhood_census, frequencies_from_micro, graphlet_census,
    micro_census, micro_csv, micro_table, same_side_star_edges,
    unrestricted_counts,
)
from .errors import (
    ClassificationError, ConsistencyError, EdgeListParseError, GraphletError,
    GraphSizeError,
)
from .frequencies import GraphletFrequencies
from .graph import (
    EdgeRef, Graph, ParseOptions, complement, induced_subgraph,
    load_edge_list, order_edges_by_degree, to_edge_list_text,
)
from .oracle import (
    OracleLimits, classify_induced_3, classify_induced_4, oracle_census,
    verify_complement_identity,
)
from .parallel import (
    ParallelConfig, SpeedupRow, WorkerFailure, measure_speedup, run_edge_jobs,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CLASSES", "CLASS_BY_ID", "CLASS_IDS", "GraphletClass", "classes_for",
    "complement_class",
    "EdgeLocalCounts", "MicroCounts", "UnrestrictedCounts", "clear_marks",
    "clique_count", "close_quads", "close_triads", "cycle_count",
    "edge_neighborhood_census", "frequencies_from_micro", "graphlet_census",
    "micro_census", "micro_csv", "micro_table", "same_side_star_edges",
    "unrestricted_counts",
    "ClassificationError", "ConsistencyError", "EdgeListParseError",
    "GraphletError", "GraphSizeError",
    "GraphletFrequencies",
    "EdgeRef", "Graph", "ParseOptions", "complement", "induced_subgraph",
    "load_edge_list", "order_edges_by_degree", "to_edge_list_text",
    "OracleLimits", "classify_induced_3", "classify_induced_4",
    "oracle_census", "verify_complement_identity",
    "ParallelConfig", "SpeedupRow", "WorkerFailure", "measure_speedup",
    "run_edge_jobs",
    "__version__",
]
