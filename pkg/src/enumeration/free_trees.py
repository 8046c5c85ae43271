"""
Isomorphism-free generation of free trees.

Trees are produced as level sequences of trees rooted at a centre (depth of
each vertex in preorder). Successive rooted trees come from the
Beyer-Hedetniemi successor rule; sequences that are not the canonical
centre-rooted form of a free tree are skipped with the Wright, Richmond,
Odlyzko and McKay jump, which gives constant amortized time per tree.
Generation order is deterministic.
"""

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path

from src.core.errors import CapExceededError
from src.graph.core import Tree, tree_from_edge_list
from src.graph.formats import iter_graph6_file

logger = logging.getLogger(__name__)

DEFAULT_TREE_CAP = 22
DEFAULT_BATCH_SIZE = 1024

LevelSequence = list[int]


def _next_rooted_tree(predecessor: LevelSequence, p: int | None = None) -> LevelSequence | None:
    """Beyer-Hedetniemi successor of a rooted level sequence."""
    if p is None:
        p = len(predecessor) - 1
        while predecessor[p] == 1:
            p -= 1
    if p == 0:
        return None

    q = p - 1
    while predecessor[q] != predecessor[p] - 1:
        q -= 1
    result = list(predecessor)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _split_tree(layout: LevelSequence) -> tuple[LevelSequence, LevelSequence]:
    """
    Split off the root's first subtree.

    Returns the first subtree (re-rooted, levels shifted down by one) and the
    remaining tree with that subtree removed.
    """
    second_child = next((i for i in range(2, len(layout)) if layout[i] == 1), len(layout))
    left = [level - 1 for level in layout[1:second_child]]
    rest = [0, *layout[second_child:]]
    return left, rest


def _next_tree(candidate: LevelSequence) -> LevelSequence:
    """
    Return candidate if it is the canonical centre-rooted form of a free tree,
    otherwise jump to the next sequence that is.

    Canonical means the first subtree is no taller than the rest of the tree;
    at equal heights it has no more vertices, and at equal size it does not
    come later lexicographically.
    """
    left, rest = _split_tree(candidate)
    left_height = max(left)
    rest_height = max(rest)

    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate

    p = len(left)
    jumped = _next_rooted_tree(candidate, p)
    assert jumped is not None
    if candidate[p] > 2:
        new_left, _ = _split_tree(jumped)
        suffix = list(range(1, max(new_left) + 2))
        jumped[-len(suffix) :] = suffix
    return jumped


def layout_to_tree(layout: LevelSequence) -> Tree:
    """Build the tree of a level sequence; vertex i is the i-th preorder vertex."""
    edges = []
    stack: list[int] = []
    for i, level in enumerate(layout):
        while stack and layout[stack[-1]] >= level:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return tree_from_edge_list(len(layout), edges)


def free_tree_layouts(n: int, tree_cap: int = DEFAULT_TREE_CAP) -> Iterator[LevelSequence]:
    """
    Level sequences of all free trees on n vertices, one per isomorphism class.

    Raises:
        ValueError: If n < 1
        CapExceededError: If n exceeds tree_cap
    """
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    if n > tree_cap:
        raise CapExceededError("free tree enumeration", n, tree_cap)
    if n == 1:
        yield [0]
        return

    # the path rooted at its centre
    layout: LevelSequence | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_tree(layout)
        yield list(layout)
        layout = _next_rooted_tree(layout)


def _batched(items: Iterator[Tree], size: int) -> Iterator[list[Tree]]:
    while batch := list(islice(items, size)):
        yield batch


@dataclass(frozen=True)
class TreeStream:
    """
    A deterministic, re-iterable sequence of pairwise non-isomorphic trees.

    Attributes:
        order: Vertex count of every tree (None for mixed external files)
        source: "internal" for the generator, otherwise the file it reads
    """

    order: int | None
    source: str
    factory: Callable[[], Iterator[Tree]] = field(repr=False, compare=False)

    def __iter__(self) -> Iterator[Tree]:
        return self.factory()

    def batches(self, size: int = DEFAULT_BATCH_SIZE) -> Iterator[list[Tree]]:
        """Consecutive chunks of `size` trees; the last one may be shorter."""
        if size < 1:
            raise ValueError(f"batch size must be >= 1, got {size}")
        return _batched(iter(self), size)

    def count(self) -> int:
        return sum(1 for _ in self)


def free_trees(n: int, tree_cap: int = DEFAULT_TREE_CAP) -> TreeStream:
    """
    All free trees of order n, each isomorphism class exactly once.

    Raises:
        CapExceededError: If n exceeds tree_cap
    """
    if n > tree_cap:
        raise CapExceededError("free tree enumeration", n, tree_cap)
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")

    def generate() -> Iterator[Tree]:
        for layout in free_tree_layouts(n, tree_cap=tree_cap):
            yield layout_to_tree(layout)

    return TreeStream(order=n, source="internal", factory=generate)


def trees_from_graph6_file(path: Path | str, n: int | None = None) -> TreeStream:
    """
    Trees read from an external graph6 file (one graph per line).

    Lines that are not trees raise NotATreeError; with `n` set, trees of other
    orders are skipped.
    """
    path = Path(path)

    def generate() -> Iterator[Tree]:
        for graph in iter_graph6_file(path):
            if n is not None and graph.n != n:
                continue
            yield Tree.from_graph(graph)

    return TreeStream(order=n, source=str(path), factory=generate)
