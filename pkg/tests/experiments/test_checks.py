"""
Tests for per-graph measurements and violation checks.
"""

from dataclasses import replace

from src.experiments.checks import (
    bfs_spanning_tree,
    diameter_bound,
    graph_facts,
    graph_violations,
    tree_facts,
    tree_violations,
)
from src.families.constructors import path, star
from src.graph.core import from_edge_list, is_tree


def _cycle(n: int):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


class TestTreeFacts:
    """Tests for tree_facts and tree_violations."""

    def test_diameter_bound(self):
        """Test ceil((d + 1) / 3) at a few diameters."""
        assert [diameter_bound(d) for d in range(7)] == [1, 1, 1, 2, 2, 2, 3]

    def test_p7(self):
        """Test the invariants of P_7."""
        facts = tree_facts(path(7))

        assert (facts.diameter, facts.gamma, facts.m_below_1, facts.equal_1) == (6, 3, 3, 0)
        assert facts.is_extremal
        assert not facts.gamma_member
        assert tree_violations(facts) == []

    def test_star(self):
        """Test the invariants of K_{1,11}."""
        facts = tree_facts(star(12))

        assert facts.m_below_1 == 1
        assert facts.equal_1 == 10
        assert facts.above_2 == 1
        assert facts.quasi_pendants == 1
        assert facts.gamma_member
        assert tree_violations(facts) == []

    def test_synthetic_violations(self):
        """Test that inconsistent facts are reported by name."""
        facts = tree_facts(path(7))

        assert "thm1" in tree_violations(replace(facts, gamma=2))
        assert "thm2" in tree_violations(replace(facts, m_below_1=2))
        assert "thm5" in tree_violations(replace(facts, gamma_member=True))
        assert "bound2" in tree_violations(replace(facts, m_below_2=7))
        assert "quasi" in tree_violations(replace(facts, quasi_pendants=4))

    def test_above(self):
        """Test is_above when m[0,1) exceeds the bound."""
        facts = replace(tree_facts(path(7)), m_below_1=4)

        assert facts.is_above
        assert not facts.is_extremal

    def test_smallest_trees(self):
        """Test that K_1 and K_2 break no statement."""
        assert tree_violations(tree_facts(path(1))) == []
        assert tree_violations(tree_facts(path(2))) == []

    def test_bound2_needs_two_vertices(self):
        """Test that m[0,2) <= n - γ is only checked from n = 2."""
        k1 = tree_facts(path(1))

        assert (k1.n, k1.gamma, k1.m_below_2) == (1, 1, 1)
        assert "bound2" not in tree_violations(k1)
        assert "bound2" in tree_violations(replace(tree_facts(path(2)), m_below_2=2))


class TestGraphFacts:
    """Tests for graph_facts and graph_violations."""

    def test_c6(self):
        """Test that C_6 has m[0,1) = 1 below its bound of 2 with no violations."""
        facts = graph_facts(_cycle(6))

        assert facts.diameter == 3
        assert facts.gamma == 2
        assert facts.m_below_1 == 1
        assert facts.bound == 2
        assert facts.m_below_2 == 3
        assert graph_violations(facts) == []

    def test_single_vertex(self):
        """Test that K_1 as a general graph breaks no statement."""
        facts = graph_facts(from_edge_list(1, []))

        assert facts.m_below_2 == 1
        assert graph_violations(facts) == []

    def test_spanning_tree(self):
        """Test that the BFS spanning tree of C_6 is a path."""
        tree = bfs_spanning_tree(_cycle(6))

        assert is_tree(tree)
        assert sorted(tree.degrees()) == [1, 1, 2, 2, 2, 2]

    def test_spanning_violation(self):
        """Test that a spanning tree with fewer small eigenvalues is flagged."""
        facts = replace(graph_facts(_cycle(6)), spanning_tree_m_below_1=0)

        assert graph_violations(facts) == ["spanning"]
