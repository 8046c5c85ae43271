"""
Canonical forms for isomorphism dedupe.

canonical_code: for any small graph, the graph6 encoding of the relabeling
whose upper-triangle bit string is lexicographically smallest among the
relabelings that list vertices by refined colour class. The colour classes
are isomorphism invariant, so equal codes mean isomorphic graphs.

tree_canonical_code: a centre-rooted parenthesis encoding for trees of any
order, linear-ish and free of permutation search.
"""

import logging

from src.core.errors import CapExceededError
from src.graph.core import Graph, NotATreeError, bfs_order, diameter_path, from_edge_list, is_tree
from src.graph.formats import to_graph6

logger = logging.getLogger(__name__)

DEFAULT_CANONICAL_CAP = 10


def refine_colours(graph: Graph) -> list[int]:
    """
    Colour refinement started from degrees.

    Colours are ranks of sorted signatures, so they depend only on the
    isomorphism class, never on the input labeling.
    """
    colours = graph.degrees()
    distinct = len(set(colours))
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in graph.adjacency[v])))
            for v in range(graph.n)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == distinct:
            return refined
        colours, distinct = refined, len(ranking)


class _Search:
    """Branch-and-bound over colour-respecting vertex orders."""

    def __init__(self, graph: Graph, colours: list[int]):
        self.graph = graph
        self.n = graph.n
        self.adjacent = [set(nbrs) for nbrs in graph.adjacency]
        # colour required at each position of the new order
        self.slots = sorted(colours)
        self.colours = colours
        self.best: list[int] | None = None
        self.best_order: list[int] | None = None

    def _is_twin(self, u: int, w: int) -> bool:
        return self.adjacent[u] - {w} == self.adjacent[w] - {u}

    def run(self) -> list[int]:
        self._extend([], [], [False] * self.n)
        assert self.best_order is not None
        return self.best_order

    def _extend(self, order: list[int], bits: list[int], used: list[bool]) -> None:
        depth = len(order)
        if depth == self.n:
            if self.best is None or bits < self.best:
                self.best = list(bits)
                self.best_order = list(order)
            return

        tried: list[int] = []
        for v in range(self.n):
            if used[v] or self.colours[v] != self.slots[depth]:
                continue
            if any(self._is_twin(t, v) for t in tried):
                continue
            tried.append(v)

            column = [1 if order[i] in self.adjacent[v] else 0 for i in range(depth)]
            prefix = bits + column
            if self.best is not None:
                best_prefix = self.best[: len(prefix)]
                if prefix > best_prefix:
                    continue

            used[v] = True
            order.append(v)
            self._extend(order, prefix, used)
            order.pop()
            used[v] = False


def canonical_order(graph: Graph) -> list[int]:
    """Vertex order (new position -> old id) realizing the canonical code."""
    return _Search(graph, refine_colours(graph)).run()


def canonical_form(graph: Graph, canonical_cap: int = DEFAULT_CANONICAL_CAP) -> Graph:
    """The graph relabeled into canonical order."""
    if graph.n > canonical_cap:
        raise CapExceededError("canonical code", graph.n, canonical_cap)
    order = canonical_order(graph)
    position = {old: new for new, old in enumerate(order)}
    return from_edge_list(graph.n, [(position[u], position[v]) for u, v in graph.edges])


def canonical_code(graph: Graph, canonical_cap: int = DEFAULT_CANONICAL_CAP) -> bytes:
    """
    Isomorphism-invariant byte string: equal codes iff isomorphic graphs.

    Raises:
        CapExceededError: If n exceeds canonical_cap
    """
    return to_graph6(canonical_form(graph, canonical_cap=canonical_cap)).encode("ascii")


def tree_centres(tree: Graph) -> list[int]:
    """The one or two middle vertices of a diameter path."""
    trace = diameter_path(tree)
    d = trace.length
    centres = {trace.vertices[d // 2], trace.vertices[(d + 1) // 2]}
    return sorted(centres)


def _rooted_code(tree: Graph, root: int) -> str:
    order, parent = bfs_order(tree, root)
    codes: dict[int, str] = {}
    for v in reversed(order):
        children = sorted(codes.pop(c) for c in tree.adjacency[v] if parent[c] == v)
        codes[v] = "(" + "".join(children) + ")"
    return codes[root]


def tree_canonical_code(tree: Graph) -> bytes:
    """
    Canonical code of a tree of any order.

    The nested-parenthesis encoding of the tree rooted at a centre, with
    children sorted; with two centres the smaller of the two encodings wins.

    Raises:
        NotATreeError: If the input is not a tree
    """
    if not is_tree(tree):
        raise NotATreeError("tree_canonical_code requires a tree")
    return min(_rooted_code(tree, c) for c in tree_centres(tree)).encode("ascii")
