"""Exact good-neighbor connectivity toolkit for small simple graphs."""

from .graph import (
    MAX_VERTICES,
    ComponentInfo,
    ComponentSummary,
    Graph,
    GraphError,
    components_after_removal,
    is_connected,
    is_spanning_subgraph,
    kappa_classical,
    lambda_classical,
)
from .codec import (
    CodecError,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    parse_graph_auto,
)
from .solver import (
    EdgeExtraResult,
    ExtraResult,
    GncResult,
    NotExistReason,
    g_range,
    is_gnc_cut,
    is_gnc_faulty_set,
    kappa_extra,
    kappa_gnc,
    kappa_gnc_oracle,
    lambda_extra,
)
from . import characterize, enumeration, extremal, families, verify

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "ComponentInfo",
    "ComponentSummary",
    "CodecError",
    "EdgeExtraResult",
    "ExtraResult",
    "GncResult",
    "Graph",
    "GraphError",
    "NotExistReason",
    "characterize",
    "components_after_removal",
    "emit_edge_list",
    "emit_graph6",
    "enumeration",
    "extremal",
    "families",
    "g_range",
    "is_connected",
    "is_gnc_cut",
    "is_gnc_faulty_set",
    "is_spanning_subgraph",
    "kappa_classical",
    "kappa_extra",
    "kappa_gnc",
    "kappa_gnc_oracle",
    "lambda_classical",
    "lambda_extra",
    "parse_edge_list",
    "parse_graph6",
    "parse_graph_auto",
    "verify",
    "__version__",
]
