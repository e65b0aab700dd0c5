"""Exact per-vertex graphlet frequencies for sparse undirected graphs.

The compiled core exposes the graph container and the transform entry
points; see `glt --help` for the command-line interface.
"""

from ._core import (
    CountOverflowError,
    Graph,
    InconsistencyError,
    ParseError,
    StructuralError,
    conversion_matrix,
    cross_check,
    from_edges,
    from_text,
    graphlet_ids,
    graphlet_names,
    oracle_net,
    oracle_raw,
    raw_frequencies,
    transform,
)

__all__ = [
    "CountOverflowError",
    "Graph",
    "InconsistencyError",
    "ParseError",
    "StructuralError",
    "conversion_matrix",
    "cross_check",
    "from_edges",
    "from_text",
    "graphlet_ids",
    "graphlet_names",
    "oracle_net",
    "oracle_raw",
    "raw_frequencies",
    "transform",
]
