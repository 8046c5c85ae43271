"""
Constructors for the named tree families.

Vertex ids follow fixed layouts so tests can refer to specific vertices:
paths in path order, stars with the centre at 0, perfect binary trees in
heap order, Γ members with the spine 0..d first and then the extra leaves.
"""

import logging

from src.families.specs import DoubleStarSpec, FamilySpecError, GammaSpec
from src.graph.core import Tree, tree_from_edge_list

logger = logging.getLogger(__name__)


def path(n: int) -> Tree:
    """P_n on vertices 0..n-1 in path order."""
    if n < 1:
        raise FamilySpecError(f"path needs n >= 1, got {n}")
    return tree_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """K_{1,n-1} with centre 0."""
    if n < 1:
        raise FamilySpecError(f"star needs n >= 1, got {n}")
    return tree_from_edge_list(n, [(0, i) for i in range(1, n)])


def perfect_binary_tree(h: int) -> Tree:
    """
    Complete binary tree of height h on 2^(h+1) - 1 vertices.

    Heap layout: the children of vertex i are 2i+1 and 2i+2.
    """
    if h < 0:
        raise FamilySpecError(f"height must be >= 0, got {h}")
    n = (1 << (h + 1)) - 1
    return tree_from_edge_list(n, [((i - 1) // 2, i) for i in range(1, n)])


def gamma_attachment_vertices(spec: GammaSpec) -> list[int]:
    """Spine ids of v_2, v_5, ..., v_{d-1} (every third vertex from the second)."""
    return [3 * i + 1 for i in range(spec.k)]


def gamma_tree(spec: GammaSpec) -> Tree:
    """
    The Γ(n, d) member H_d(n_1, ..., n_k).

    Spine v_1..v_{d+1} gets ids 0..d. Then n_i leaves are attached to
    v_{3i-1} for i = 1..k, numbered consecutively from d+1 in ascending i.
    """
    edges = [(i, i + 1) for i in range(spec.d)]
    next_id = spec.d + 1
    for anchor, count in zip(gamma_attachment_vertices(spec), spec.parts):
        for _ in range(count):
            edges.append((anchor, next_id))
            next_id += 1
    return tree_from_edge_list(next_id, edges)


def double_starlike(spec: DoubleStarSpec) -> Tree:
    """
    T(d, p, q): P_{d-1} on ids 0..d-2 with p leaves on vertex 0 and q leaves
    on vertex d-2. For d = 2 both groups land on the single spine vertex.
    """
    spine = spec.d - 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    next_id = spine
    for anchor, count in ((0, spec.p), (spine - 1, spec.q)):
        for _ in range(count):
            edges.append((anchor, next_id))
            next_id += 1
    return tree_from_edge_list(next_id, edges)
