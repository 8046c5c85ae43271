"""
Graph and Tree Representation for Spectree

Simple undirected graphs on dense vertex ids 0..n-1, with the metric and
pendant queries the spectral and domination code builds on.

Graph values are immutable after construction; every query is a pure
function, so graphs can be shared between census workers.
"""

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from src.core.errors import SpectreeError

logger = logging.getLogger(__name__)


class GraphError(SpectreeError):
    """Invalid graph construction or a query whose precondition fails."""


class VertexOutOfRangeError(GraphError):
    """A vertex id outside 0..n-1."""

    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} out of range for a graph on {n} vertices")
        self.vertex = vertex
        self.n = n


class SelfLoopError(GraphError):
    """An edge whose two endpoints coincide."""

    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class DuplicateEdgeError(GraphError):
    """The same unordered pair listed twice."""

    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (u, v)


class DisconnectedGraphError(GraphError):
    """A connected graph was required."""


class NotATreeError(GraphError):
    """A tree was required."""


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple undirected graph.

    Attributes:
        n: Vertex count (>= 1)
        adjacency: Per-vertex sorted neighbor tuples
        edges: Sorted (u, v) pairs with u < v
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        # adjacency tuples are short at desk scale
        return v in self.adjacency[u]

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRangeError(v, self.n)

    def with_edge(self, u: int, v: int) -> "Graph":
        """A new graph with one more edge (errors if it is already present)."""
        return from_edge_list(self.n, [*self.edges, (u, v)])

    def without_vertex(self, v: int) -> "Graph":
        """
        Delete vertex v and relabel the remaining vertices consecutively.

        Vertices above v shift down by one, so ids stay dense.
        """
        self.check_vertex(v)
        if self.n == 1:
            raise GraphError("cannot delete the only vertex of a graph")

        def relabel(x: int) -> int:
            return x - 1 if x > v else x

        edges = [(relabel(a), relabel(b)) for a, b in self.edges if v not in (a, b)]
        return from_edge_list(self.n - 1, edges)


@dataclass(frozen=True)
class Tree(Graph):
    """A connected graph with n - 1 edges."""

    def __post_init__(self) -> None:
        if len(self.edges) != self.n - 1 or not is_connected(self):
            raise NotATreeError(
                f"graph on {self.n} vertices with {len(self.edges)} edges is not a tree"
            )

    @classmethod
    def from_graph(cls, graph: Graph) -> "Tree":
        """Re-type a graph as a tree, checking the tree invariants."""
        if isinstance(graph, Tree):
            return graph
        return cls(n=graph.n, adjacency=graph.adjacency, edges=graph.edges)


@dataclass(frozen=True)
class PathTrace:
    """An ordered vertex sequence v_1 ... v_k of a path."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of edges on the path."""
        return len(self.vertices) - 1

    def is_valid_in(self, graph: Graph) -> bool:
        """True if consecutive vertices are adjacent and no vertex repeats."""
        if len(set(self.vertices)) != len(self.vertices):
            return False
        return all(graph.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph from a vertex count and a list of pairs.

    Args:
        n: Vertex count (>= 1)
        edges: Pairs (u, v) with 0 <= u, v < n and u != v

    Returns:
        Graph with sorted adjacency and sorted edge list

    Raises:
        GraphError: If n < 1
        VertexOutOfRangeError: If an endpoint is outside 0..n-1
        SelfLoopError: If u == v
        DuplicateEdgeError: If an unordered pair repeats
    """
    if n < 1:
        raise GraphError(f"a graph needs at least one vertex, got n={n}")

    seen: set[tuple[int, int]] = set()
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRangeError(x, n)
        if u == v:
            raise SelfLoopError(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(*key)
        seen.add(key)
        neighbors[u].append(v)
        neighbors[v].append(u)

    return Graph(
        n=n,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbors),
        edges=tuple(sorted(seen)),
    )


def tree_from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """from_edge_list, then check the result is a tree."""
    return Tree.from_graph(from_edge_list(n, edges))


def bfs_distances(graph: Graph, source: int) -> list[int | None]:
    """Hop distances from source; None marks unreachable vertices."""
    graph.check_vertex(source)
    dist: list[int | None] = [None] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        assert du is not None
        for w in graph.adjacency[u]:
            if dist[w] is None:
                dist[w] = du + 1
                queue.append(w)
    return dist


def bfs_order(graph: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    """
    Breadth-first order and parent array of the component containing root.

    Neighbors are visited in ascending id order. The root's parent is -1;
    vertices outside the component keep parent -1 and do not appear in order.
    """
    graph.check_vertex(root)
    parent = [-1] * graph.n
    seen = [False] * graph.n
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
                queue.append(w)
    return order, parent


def is_connected(graph: Graph) -> bool:
    return len(bfs_order(graph, 0)[0]) == graph.n


def is_tree(graph: Graph) -> bool:
    return len(graph.edges) == graph.n - 1 and is_connected(graph)


def connected_components(graph: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * graph.n
    components = []
    for v in range(graph.n):
        if seen[v]:
            continue
        order, _ = bfs_order(graph, v)
        for u in order:
            seen[u] = True
        components.append(sorted(order))
    return components


def distance(graph: Graph, u: int, v: int) -> int | None:
    """
    Length of a shortest u-v path.

    Returns:
        Hop count, 0 iff u == v, or None when v is unreachable from u
    """
    graph.check_vertex(v)
    return bfs_distances(graph, u)[v]


def eccentricity(graph: Graph, v: int) -> int:
    dist = bfs_distances(graph, v)
    if any(d is None for d in dist):
        raise DisconnectedGraphError("eccentricity is undefined on a disconnected graph")
    return max(d for d in dist if d is not None)


def diameter(graph: Graph) -> int:
    """
    Maximum eccentricity over all vertices (all-pairs BFS).

    Raises:
        DisconnectedGraphError: If the graph is not connected
    """
    return max(eccentricity(graph, v) for v in range(graph.n))


def _farthest(dist: list[int | None]) -> int:
    # smallest id among the vertices at maximum distance
    best = 0
    best_d = -1
    for v, d in enumerate(dist):
        if d is not None and d > best_d:
            best, best_d = v, d
    return best


def diameter_path(tree: Graph) -> PathTrace:
    """
    One diameter path of a tree, by double BFS.

    BFS from vertex 0 to the farthest vertex u, BFS from u to the farthest
    vertex w, return the u..w path. Ties go to the smallest vertex id.

    Raises:
        NotATreeError: If the input is not a tree
    """
    if not is_tree(tree):
        raise NotATreeError("diameter_path requires a tree")

    u = _farthest(bfs_distances(tree, 0))
    _, parent = bfs_order(tree, u)
    w = _farthest(bfs_distances(tree, u))

    path = [w]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return PathTrace(vertices=tuple(path))


def tree_diameter(tree: Graph) -> int:
    """Diameter of a tree via double BFS (linear time)."""
    return diameter_path(tree).length


def pendant_vertices(graph: Graph) -> frozenset[int]:
    """Vertices of degree one."""
    return frozenset(v for v in range(graph.n) if len(graph.adjacency[v]) == 1)


def quasi_pendant_vertices(graph: Graph) -> frozenset[int]:
    """Vertices adjacent to at least one pendant vertex."""
    pendants = pendant_vertices(graph)
    return frozenset(graph.adjacency[p][0] for p in pendants)


def quasi_pendant_count(graph: Graph) -> int:
    return len(quasi_pendant_vertices(graph))
