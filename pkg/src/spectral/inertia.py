"""
Exact eigenvalue counting by Sylvester's law of inertia.

The inertia of L(G) - alpha*I (counts of negative, zero and positive
eigenvalues) is invariant under congruence, so a symmetric elimination in
exact rational arithmetic counts the Laplacian eigenvalues below, at and
above alpha without ever computing them.

Trees use a linear-time leaf-to-root diagonalization. Every other graph goes
through dense symmetric Gaussian congruence.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from src.graph.core import Graph, bfs_order, is_tree
from src.spectral.laplacian import shifted_laplacian
from src.spectral.rational import IntervalSpec, parse_rational

logger = logging.getLogger(__name__)

ONE = Fraction(1)
TWO = Fraction(2)


@dataclass(frozen=True)
class InertiaTriple:
    """
    Laplacian eigenvalue counts relative to a threshold alpha.

    Attributes:
        below: Eigenvalues strictly less than alpha
        equal: Multiplicity of alpha as an eigenvalue
        above: Eigenvalues strictly greater than alpha
    """

    below: int
    equal: int
    above: int

    def __post_init__(self) -> None:
        if min(self.below, self.equal, self.above) < 0:
            raise ValueError(f"inertia counts must be non-negative: {self}")

    @property
    def n(self) -> int:
        return self.below + self.equal + self.above

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.below, self.equal, self.above)


def _count_signs(values: list[Fraction]) -> InertiaTriple:
    below = sum(1 for x in values if x < 0)
    equal = sum(1 for x in values if x == 0)
    return InertiaTriple(below=below, equal=equal, above=len(values) - below - equal)


def tree_inertia(tree: Graph, alpha: Fraction) -> InertiaTriple:
    """
    Diagonalize L(T) - alpha*I on a tree in linear time.

    Root at vertex 0 and visit vertices in reverse BFS order. Each vertex
    starts at deg(v) - alpha. When all of its attached children are
    non-zero, a vertex subtracts the sum of their reciprocals. Otherwise one
    zero child becomes 2, the vertex becomes -1/2 and the edge to its own
    parent is cut.
    """
    order, parent = bfs_order(tree, 0)
    value = [Fraction(len(nbrs)) - alpha for nbrs in tree.adjacency]
    detached = [False] * tree.n

    for v in reversed(order):
        children = [c for c in tree.adjacency[v] if parent[c] == v and not detached[c]]
        if not children:
            continue
        zero_child = next((c for c in children if value[c] == 0), None)
        if zero_child is None:
            value[v] -= sum((ONE / value[c] for c in children), Fraction(0))
        else:
            value[zero_child] = TWO
            value[v] = Fraction(-1, 2)
            detached[v] = True

    return _count_signs(value)


def matrix_inertia(matrix: list[list[Fraction]]) -> InertiaTriple:
    """
    Inertia of a symmetric rational matrix by Gaussian congruence.

    A zero pivot with a non-zero entry in its row is repaired by adding (or,
    if that cancels, subtracting) the matching row and column to the pivot
    row and column. A zero pivot with an all-zero row is a zero eigenvalue.
    """
    a = [row[:] for row in matrix]
    signs: list[Fraction] = []

    while a:
        size = len(a)
        if a[0][0] == 0:
            j = next((k for k in range(1, size) if a[0][k] != 0), None)
            if j is None:
                signs.append(Fraction(0))
                a = [row[1:] for row in a[1:]]
                continue
            scale = ONE if 2 * a[0][j] + a[j][j] != 0 else -ONE
            # row 0 += scale * row j, then column 0 += scale * column j
            a[0] = [x + scale * y for x, y in zip(a[0], a[j])]
            for row in a:
                row[0] += scale * row[j]

        pivot = a[0][0]
        signs.append(pivot)
        head = a[0]
        a = [
            [a[i][k] - a[i][0] * head[k] / pivot for k in range(1, size)]
            for i in range(1, size)
        ]

    return _count_signs(signs)


def inertia_at(graph: Graph, alpha: Fraction | int | str) -> InertiaTriple:
    """
    Count Laplacian eigenvalues of a graph below, at and above alpha exactly.

    Args:
        graph: Any graph; trees take the linear-time path
        alpha: Finite rational threshold (strings like "3/2" are accepted)

    Returns:
        InertiaTriple with below + equal + above = n
    """
    alpha = parse_rational(alpha)
    if is_tree(graph):
        return tree_inertia(graph, alpha)
    return matrix_inertia(shifted_laplacian(graph, alpha))


def count_below(graph: Graph, alpha: Fraction | int | str) -> int:
    return inertia_at(graph, alpha).below


def m_below_one(graph: Graph) -> int:
    """m_G[0,1): the number of Laplacian eigenvalues strictly less than 1."""
    return inertia_at(graph, ONE).below


def m_interval(graph: Graph, interval: IntervalSpec) -> int:
    """
    Number of Laplacian eigenvalues inside an interval, exactly.

    Computed as (eigenvalues up to the upper endpoint) minus (eigenvalues
    before the lower endpoint); open and closed ends choose between the
    `below` and `below + equal` counts of each inertia triple.
    """
    if interval.is_empty:
        return 0

    if interval.upper is None:
        up_to_upper = graph.n
    else:
        upper = inertia_at(graph, interval.upper)
        up_to_upper = upper.below + (upper.equal if interval.upper_closed else 0)

    if interval.lower is None:
        before_lower = 0
    else:
        lower = inertia_at(graph, interval.lower)
        before_lower = lower.below + (0 if interval.lower_closed else lower.equal)

    return up_to_upper - before_lower
