"""
Spectree Enumeration Module

Free trees by level sequences, connected small graphs by labeled scan, and
canonical codes for isomorphism dedupe.
"""

from .canonical import canonical_code, canonical_form, tree_canonical_code
from .connected import connected_graphs
from .free_trees import (
    TreeStream,
    free_tree_layouts,
    free_trees,
    layout_to_tree,
    trees_from_graph6_file,
)

__all__ = [
    "TreeStream",
    "free_trees",
    "free_tree_layouts",
    "layout_to_tree",
    "trees_from_graph6_file",
    "canonical_code",
    "canonical_form",
    "tree_canonical_code",
    "connected_graphs",
]
