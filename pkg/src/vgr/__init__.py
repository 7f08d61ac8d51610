"""Toolkit for vertex-girth-regular graphs: counting, bounds, search."""
from .graph import (
    DisconnectedGraphError,
    Graph,
    NotVgr,
    VgrProfile,
    classify,
    count_girth_cycles_edge,
    count_girth_cycles_vertex,
    girth,
    is_bipartite,
    is_connected,
    total_girth_cycles,
    vertex_signature,
)
from .canon import are_isomorphic, canonical_form, canonical_graph

__all__ = [
    "DisconnectedGraphError",
    "Graph",
    "NotVgr",
    "VgrProfile",
    "classify",
    "count_girth_cycles_edge",
    "count_girth_cycles_vertex",
    "girth",
    "is_bipartite",
    "is_connected",
    "total_girth_cycles",
    "vertex_signature",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
]
