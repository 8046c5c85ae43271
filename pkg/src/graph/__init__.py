"""
Spectree Graph Module

Immutable graphs and trees on vertex ids 0..n-1, metric queries and the
graph6 / edge-list interchange formats.
"""

from .core import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    Graph,
    GraphError,
    NotATreeError,
    PathTrace,
    SelfLoopError,
    Tree,
    VertexOutOfRangeError,
    connected_components,
    diameter,
    diameter_path,
    distance,
    from_edge_list,
    is_connected,
    is_tree,
    pendant_vertices,
    quasi_pendant_count,
    quasi_pendant_vertices,
    tree_diameter,
    tree_from_edge_list,
)
from .formats import (
    EdgeListError,
    Graph6Error,
    GraphFormatError,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)

__all__ = [
    "Graph",
    "Tree",
    "PathTrace",
    "from_edge_list",
    "tree_from_edge_list",
    "distance",
    "diameter",
    "diameter_path",
    "tree_diameter",
    "is_connected",
    "is_tree",
    "connected_components",
    "pendant_vertices",
    "quasi_pendant_vertices",
    "quasi_pendant_count",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "to_edge_list",
    # Errors
    "GraphError",
    "VertexOutOfRangeError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "DisconnectedGraphError",
    "NotATreeError",
    "GraphFormatError",
    "Graph6Error",
    "EdgeListError",
]
