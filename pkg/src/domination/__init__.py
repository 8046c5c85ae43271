"""
Spectree Domination Module

Dominating-set verification and exact domination numbers.
"""

from .dominating import (
    DominationResult,
    domination_number,
    domination_number_exact,
    domination_number_tree,
    is_dominating,
    tree_domination_number,
)

__all__ = [
    "DominationResult",
    "is_dominating",
    "domination_number",
    "domination_number_tree",
    "domination_number_exact",
    "tree_domination_number",
]
