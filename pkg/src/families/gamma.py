"""
The Γ(n, d) family: enumeration up to isomorphism and structural recognition.
"""

import logging
from collections.abc import Iterator

from src.families.specs import GammaSpec
from src.graph.core import Graph, NotATreeError, diameter_path, is_tree

logger = logging.getLogger(__name__)


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of total into `parts` parts, in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first, *rest)


def enumerate_gamma(n: int, d: int) -> list[GammaSpec]:
    """
    One GammaSpec per isomorphism class of Γ(n, d).

    Compositions of n - d - 1 into (d + 1) / 3 parts are kept only when they
    are not larger than their own reversal, so each reversal orbit appears
    once. Returns an empty list when d is not congruent to 2 mod 3 or when
    n < d + 1.
    """
    if d < 2 or d % 3 != 2 or n < d + 1:
        return []
    k = (d + 1) // 3
    specs = [
        GammaSpec(d=d, parts=parts)
        for parts in weak_compositions(n - d - 1, k)
        if parts <= tuple(reversed(parts))
    ]
    logger.debug(f"Γ({n},{d}) has {len(specs)} members")
    return specs


def is_gamma_member(tree: Graph) -> GammaSpec | None:
    """
    Recover the GammaSpec of a tree, or None if it is not in any Γ(n, d).

    Uses one diameter path: every vertex off that path must be a leaf hanging
    from a spine vertex whose 0-based index is 1 mod 3. That index set is
    closed under reversing the path because d is 2 mod 3.

    Raises:
        NotATreeError: If the input is not a tree
    """
    if not is_tree(tree):
        raise NotATreeError("is_gamma_member requires a tree")

    trace = diameter_path(tree)
    d = trace.length
    if d % 3 != 2:
        return None

    index = {v: i for i, v in enumerate(trace.vertices)}
    parts = [0] * ((d + 1) // 3)
    for v in range(tree.n):
        if v in index:
            continue
        nbrs = tree.adjacency[v]
        if len(nbrs) != 1:
            return None
        i = index.get(nbrs[0])
        if i is None or i % 3 != 1:
            return None
        parts[i // 3] += 1

    return GammaSpec(d=d, parts=tuple(parts)).normalized()
