"""
Spectree Families Module

Paths, stars, perfect binary trees, the Γ(n, d) family and double starlike
trees, with the Γ enumerator, recognizer and property checker.
"""

from .constructors import double_starlike, gamma_tree, path, perfect_binary_tree, star
from .gamma import enumerate_gamma, is_gamma_member
from .properties import PropertyReport, check_properties
from .random_trees import random_gamma_spec, random_tree, tree_from_prufer
from .specs import (
    DoubleStarSpec,
    FamilySpecError,
    GammaSpec,
    make_double_star_spec,
    make_gamma_spec,
)

__all__ = [
    "path",
    "star",
    "perfect_binary_tree",
    "gamma_tree",
    "double_starlike",
    "enumerate_gamma",
    "is_gamma_member",
    "check_properties",
    "PropertyReport",
    "GammaSpec",
    "DoubleStarSpec",
    "make_gamma_spec",
    "make_double_star_spec",
    "random_tree",
    "random_gamma_spec",
    "tree_from_prufer",
    "FamilySpecError",
]
