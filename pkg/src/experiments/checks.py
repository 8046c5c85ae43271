"""
Per-graph measurements and the inequality checks run over them.

Each `violations_*` helper returns the names of the statements a graph
breaks; the census and verification suite only count those names.

Tree statements:
    thm1    m[0,1) <= γ
    thm2    m[0,1) >= ceil((d + 1) / 3)
    thm3    γ >= (d + 1) / 3
    thm4    γ = (d + 1) / 3  iff  m[0,1) = (d + 1) / 3
    thm5    m[0,1) = (d + 1) / 3  iff  the tree is in Γ(n, d)
    bound2  n >= 2  implies  m[0,2) <= n - γ
    quasi   n > 2  implies  m[0,1) >= number of quasi-pendant vertices
    upper   n > 2q  implies  m(2,n] >= q
"""

import logging
import math
from dataclasses import dataclass

from src.domination.dominating import (
    DEFAULT_EXACT_CAP,
    domination_number_exact,
    tree_domination_number,
)
from src.families.gamma import is_gamma_member
from src.graph.core import (
    Graph,
    bfs_order,
    diameter,
    from_edge_list,
    quasi_pendant_count,
    tree_diameter,
)
from src.spectral.inertia import inertia_at

logger = logging.getLogger(__name__)

TREE_CHECKS = ("thm1", "thm2", "thm3", "thm4", "thm5", "bound2", "quasi", "upper")
GRAPH_CHECKS = ("thm1", "bound2", "quasi", "spanning")


def diameter_bound(d: int) -> int:
    """ceil((d + 1) / 3)"""
    return math.ceil((d + 1) / 3)


@dataclass(frozen=True)
class TreeFacts:
    """Exact invariants of one tree."""

    n: int
    diameter: int
    gamma: int
    m_below_1: int
    equal_1: int
    m_below_2: int
    above_2: int
    quasi_pendants: int
    gamma_member: bool

    @property
    def bound(self) -> int:
        return diameter_bound(self.diameter)

    @property
    def is_extremal(self) -> bool:
        """m[0,1) attains ceil((d + 1) / 3)."""
        return self.m_below_1 == self.bound

    @property
    def is_above(self) -> bool:
        return self.m_below_1 >= self.bound + 1


def tree_facts(tree: Graph) -> TreeFacts:
    at_one = inertia_at(tree, 1)
    at_two = inertia_at(tree, 2)
    return TreeFacts(
        n=tree.n,
        diameter=tree_diameter(tree),
        gamma=tree_domination_number(tree),
        m_below_1=at_one.below,
        equal_1=at_one.equal,
        m_below_2=at_two.below,
        above_2=at_two.above,
        quasi_pendants=quasi_pendant_count(tree),
        gamma_member=is_gamma_member(tree) is not None,
    )


def tree_violations(facts: TreeFacts) -> list[str]:
    """Names from TREE_CHECKS that this tree breaks (normally none)."""
    third = facts.diameter + 1
    m_is_third = 3 * facts.m_below_1 == third
    broken = []
    if facts.m_below_1 > facts.gamma:
        broken.append("thm1")
    if facts.m_below_1 < facts.bound:
        broken.append("thm2")
    if 3 * facts.gamma < third:
        broken.append("thm3")
    if (3 * facts.gamma == third) != m_is_third:
        broken.append("thm4")
    if facts.gamma_member != m_is_third:
        broken.append("thm5")
    if facts.n >= 2 and facts.m_below_2 > facts.n - facts.gamma:
        broken.append("bound2")
    if facts.n > 2 and facts.m_below_1 < facts.quasi_pendants:
        broken.append("quasi")
    if facts.n > 2 * facts.quasi_pendants and facts.above_2 < facts.quasi_pendants:
        broken.append("upper")
    return broken


@dataclass(frozen=True)
class GraphFacts:
    """Exact invariants of one connected graph."""

    n: int
    diameter: int
    gamma: int
    m_below_1: int
    m_below_2: int
    quasi_pendants: int
    spanning_tree_m_below_1: int

    @property
    def bound(self) -> int:
        return diameter_bound(self.diameter)


def bfs_spanning_tree(graph: Graph) -> Graph:
    """Spanning tree of BFS parent edges from vertex 0 (graph must be connected)."""
    _, parent = bfs_order(graph, 0)
    return from_edge_list(graph.n, [(v, parent[v]) for v in range(graph.n) if parent[v] >= 0])


def graph_facts(graph: Graph, exact_cap: int = DEFAULT_EXACT_CAP) -> GraphFacts:
    return GraphFacts(
        n=graph.n,
        diameter=diameter(graph),
        gamma=domination_number_exact(graph, exact_cap=exact_cap).gamma,
        m_below_1=inertia_at(graph, 1).below,
        m_below_2=inertia_at(graph, 2).below,
        quasi_pendants=quasi_pendant_count(graph),
        spanning_tree_m_below_1=inertia_at(bfs_spanning_tree(graph), 1).below,
    )


def graph_violations(facts: GraphFacts) -> list[str]:
    """Names from GRAPH_CHECKS that this graph breaks."""
    broken = []
    if facts.m_below_1 > facts.gamma:
        broken.append("thm1")
    if facts.n >= 2 and facts.m_below_2 > facts.n - facts.gamma:
        broken.append("bound2")
    if facts.n > 2 and facts.m_below_1 < facts.quasi_pendants:
        broken.append("quasi")
    if facts.m_below_1 > facts.spanning_tree_m_below_1:
        broken.append("spanning")
    return broken
