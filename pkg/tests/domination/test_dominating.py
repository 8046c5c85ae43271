"""
Tests for domination numbers and dominating-set verification.
"""

import random
from itertools import combinations

import pytest

from src.core.errors import CapExceededError
from src.domination.dominating import (
    DominationResult,
    domination_number,
    domination_number_exact,
    domination_number_tree,
    is_dominating,
    tree_domination_number,
)
from src.enumeration.free_trees import free_trees
from src.families.constructors import gamma_tree, path, star
from src.families.gamma import enumerate_gamma
from src.families.random_trees import random_tree
from src.graph.core import Graph, NotATreeError, VertexOutOfRangeError, from_edge_list


def _brute_force_gamma(graph: Graph) -> int:
    for k in range(1, graph.n + 1):
        if any(is_dominating(graph, subset) for subset in combinations(range(graph.n), k)):
            return k
    raise AssertionError("unreachable")


def _cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


class TestIsDominating:
    """Tests for is_dominating."""

    def test_star_centre(self):
        """Test that the centre of K_{1,5} dominates."""
        assert is_dominating(star(6), {0})

    def test_path_end(self):
        """Test that one end of P_4 does not dominate."""
        assert not is_dominating(path(4), {0})

    def test_gamma_spine_vertices(self):
        """Test that v_2, v_5, v_8 dominate every member of Γ(12, 8)."""
        for spec in enumerate_gamma(12, 8):
            assert is_dominating(gamma_tree(spec), [1, 4, 7])

    def test_invalid_vertex(self):
        """Test that an invalid id raises VertexOutOfRangeError."""
        with pytest.raises(VertexOutOfRangeError):
            is_dominating(path(3), [5])


class TestTreeDP:
    """Tests for the tree dynamic program."""

    def test_p7(self):
        """Test γ(P_7) = 3 with the lexicographically smallest witness."""
        result = domination_number_tree(path(7))

        assert result == DominationResult(gamma=3, witness=(0, 2, 5))
        assert _brute_force_gamma(path(7)) == 3

    def test_star(self):
        """Test γ(K_{1,9}) = 1 with the centre as witness."""
        assert domination_number_tree(star(10)) == DominationResult(1, (0,))

    def test_small_trees(self):
        """Test K_1 and K_2."""
        assert domination_number_tree(from_edge_list(1, [])).witness == (0,)
        assert domination_number_tree(path(2)).witness == (0,)

    def test_gamma_12_8(self):
        """Test γ = 3 for every member of Γ(12, 8)."""
        for spec in enumerate_gamma(12, 8):
            assert tree_domination_number(gamma_tree(spec)) == 3

    def test_witness_dominates(self):
        """Test that the witness is a dominating set of size γ on random trees."""
        rng = random.Random(4)
        for _ in range(40):
            tree = random_tree(rng.randint(1, 30), rng)
            result = domination_number_tree(tree)
            assert len(result.witness) == result.gamma
            assert is_dominating(tree, result.witness)
            assert tree_domination_number(tree) == result.gamma

    def test_non_tree_rejected(self):
        """Test that the DP refuses a cycle."""
        with pytest.raises(NotATreeError):
            domination_number_tree(_cycle(5))
        with pytest.raises(NotATreeError):
            tree_domination_number(_cycle(5))


class TestExactSearch:
    """Tests for subset search on general graphs."""

    def test_c6(self):
        """Test γ(C_6) = 2."""
        result = domination_number_exact(_cycle(6))

        assert result.gamma == 2
        assert result.witness == (0, 3)

    def test_complete(self):
        """Test γ(K_n) = 1."""
        k5 = from_edge_list(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])

        assert domination_number_exact(k5) == DominationResult(1, (0,))

    def test_isolated_vertices_forced(self):
        """Test that isolated vertices join every dominating set."""
        graph = from_edge_list(5, [(0, 1), (1, 2)])

        result = domination_number_exact(graph)
        assert result.gamma == 3
        assert {3, 4} <= set(result.witness)

    def test_cap(self):
        """Test that n above the cap raises CapExceededError."""
        with pytest.raises(CapExceededError, match="exceeds cap 5"):
            domination_number_exact(path(6), exact_cap=5)

    def test_agrees_with_tree_dp(self):
        """Test DP against subset search on all trees with n <= 10."""
        for n in range(1, 11):
            for tree in free_trees(n):
                assert domination_number_tree(tree) == domination_number_exact(tree)

    def test_agrees_with_brute_force(self):
        """Test subset search against plain enumeration on random graphs."""
        rng = random.Random(9)
        for _ in range(25):
            n = rng.randint(2, 8)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35]
            graph = from_edge_list(n, pairs)
            assert domination_number_exact(graph).gamma == _brute_force_gamma(graph)

    def test_dispatch(self):
        """Test that domination_number picks the right algorithm."""
        assert domination_number(path(7)).witness == (0, 2, 5)
        assert domination_number(_cycle(6)).gamma == 2
