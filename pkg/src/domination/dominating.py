"""
Exact domination numbers.

Trees use a three-state dynamic program rooted at vertex 0 (each vertex is
in the set, dominated by a child, or waiting for its parent). General graphs
use subset search in increasing cardinality over closed-neighbourhood
bitmasks, which makes the first hit minimal by construction.
"""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from src.core.errors import CapExceededError
from src.graph.core import Graph, NotATreeError, bfs_order, is_tree

logger = logging.getLogger(__name__)

DEFAULT_EXACT_CAP = 24

# Larger than any set size; sums are clamped to it
_INF = 1 << 30


@dataclass(frozen=True)
class DominationResult:
    """
    Attributes:
        gamma: Domination number
        witness: Sorted vertex ids of a minimum dominating set
    """

    gamma: int
    witness: tuple[int, ...]


def is_dominating(graph: Graph, vertices: Iterable[int]) -> bool:
    """
    True iff every vertex is in the set or adjacent to a member.

    Raises:
        VertexOutOfRangeError: If the set holds an invalid id
    """
    chosen = set(vertices)
    for v in chosen:
        graph.check_vertex(v)
    return all(
        v in chosen or any(w in chosen for w in graph.adjacency[v]) for v in range(graph.n)
    )


def _tree_min_size(
    tree: Graph, order: list[int], parent: list[int], forced: dict[int, bool]
) -> int:
    """
    Minimum dominating set size under per-vertex constraints.

    `forced[v]` True keeps v in the set, False keeps it out.
    """
    n = tree.n
    in_set = [0] * n
    dominated = [0] * n
    waiting = [0] * n

    for v in reversed(order):
        children = [c for c in tree.adjacency[v] if parent[c] == v]

        take = 1 + sum(min(in_set[c], dominated[c], waiting[c]) for c in children)
        skip = sum(min(in_set[c], dominated[c]) for c in children)
        if not children:
            covered_by_child = _INF
        elif any(in_set[c] <= dominated[c] for c in children):
            covered_by_child = skip
        else:
            covered_by_child = skip + min(in_set[c] - dominated[c] for c in children)
        rest = sum(dominated[c] for c in children)

        in_set[v] = min(take, _INF)
        dominated[v] = min(covered_by_child, _INF)
        waiting[v] = min(rest, _INF)

        rule = forced.get(v)
        if rule is True:
            dominated[v] = waiting[v] = _INF
        elif rule is False:
            in_set[v] = _INF

    root = order[0]
    return min(in_set[root], dominated[root])


def tree_domination_number(tree: Graph) -> int:
    """γ(T) without a witness; the cheap path for census runs."""
    if not is_tree(tree):
        raise NotATreeError("tree_domination_number requires a tree")
    order, parent = bfs_order(tree, 0)
    return _tree_min_size(tree, order, parent, {})


def domination_number_tree(tree: Graph) -> DominationResult:
    """
    Exact domination number of a tree with a lexicographically smallest witness.

    The witness is fixed vertex by vertex in id order: a vertex joins the set
    whenever the constrained optimum stays at γ with it included.

    Raises:
        NotATreeError: If the input is not a tree
    """
    if not is_tree(tree):
        raise NotATreeError("domination_number_tree requires a tree")

    order, parent = bfs_order(tree, 0)
    gamma = _tree_min_size(tree, order, parent, {})

    forced: dict[int, bool] = {}
    for v in range(tree.n):
        forced[v] = True
        if _tree_min_size(tree, order, parent, forced) != gamma:
            forced[v] = False

    witness = tuple(v for v in range(tree.n) if forced[v])
    return DominationResult(gamma=gamma, witness=witness)


def domination_number_exact(graph: Graph, exact_cap: int = DEFAULT_EXACT_CAP) -> DominationResult:
    """
    Exact domination number of any graph by subset search.

    Isolated vertices belong to every dominating set and are fixed up front.
    Cardinalities below ceil(n / (Δ + 1)) cannot dominate and are skipped;
    subsets of each size are tried in lexicographic order.

    Raises:
        CapExceededError: If n exceeds exact_cap
    """
    n = graph.n
    if n > exact_cap:
        raise CapExceededError("exact domination search", n, exact_cap)

    full = (1 << n) - 1
    closed = [(1 << v) | sum(1 << w for w in graph.adjacency[v]) for v in range(n)]

    isolated = [v for v in range(n) if not graph.adjacency[v]]
    candidates = [v for v in range(n) if graph.adjacency[v]]
    base = 0
    for v in isolated:
        base |= closed[v]

    max_degree = max(graph.degrees())
    start = max(math.ceil(n / (max_degree + 1)), len(isolated))

    for k in range(start, n + 1):
        for extra in combinations(candidates, k - len(isolated)):
            covered = base
            for v in extra:
                covered |= closed[v]
            if covered == full:
                witness = tuple(sorted((*isolated, *extra)))
                return DominationResult(gamma=k, witness=witness)

    # unreachable: V(G) itself dominates
    raise AssertionError("no dominating set found")


def domination_number(graph: Graph, exact_cap: int = DEFAULT_EXACT_CAP) -> DominationResult:
    """Tree DP for trees, subset search for everything else."""
    if is_tree(graph):
        return domination_number_tree(graph)
    return domination_number_exact(graph, exact_cap=exact_cap)
