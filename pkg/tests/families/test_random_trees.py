"""
Tests for random trees and random Γ specs.
"""

import random
from itertools import product

import pytest

from src.families.constructors import star
from src.families.random_trees import random_gamma_spec, random_tree, tree_from_prufer
from src.graph.core import Tree, is_tree


class TestPrufer:
    """Tests for tree_from_prufer."""

    def test_empty_sequence(self):
        """Test that the empty sequence decodes to K_2."""
        assert tree_from_prufer([]).edges == ((0, 1),)

    def test_constant_sequence_is_a_star(self):
        """Test that [0, 0, 0, 0] decodes to K_{1,5} centred at 0."""
        assert tree_from_prufer([0, 0, 0, 0]) == star(6)

    def test_degrees(self):
        """Test that each vertex appears deg(v) - 1 times in the sequence."""
        sequence = [3, 3, 1, 5]
        tree = tree_from_prufer(sequence)

        for v in range(tree.n):
            assert tree.degree(v) == sequence.count(v) + 1

    def test_cayley_count(self):
        """Test that the 5^3 sequences of length 3 give 125 distinct trees."""
        trees = {tree_from_prufer(list(seq)).edges for seq in product(range(5), repeat=3)}

        assert len(trees) == 125

    def test_out_of_range(self):
        """Test that an entry >= n raises ValueError."""
        with pytest.raises(ValueError, match="out of range for n=4"):
            tree_from_prufer([0, 4])


class TestRandomTree:
    """Tests for random_tree."""

    def test_is_tree(self):
        """Test that the result is a tree of the requested order."""
        rng = random.Random(0)
        for n in (1, 2, 3, 10, 50):
            tree = random_tree(n, rng)
            assert isinstance(tree, Tree)
            assert tree.n == n
            assert is_tree(tree)

    def test_seeded(self):
        """Test that equal seeds give equal trees."""
        assert random_tree(20, random.Random(5)) == random_tree(20, random.Random(5))

    def test_invalid_order(self):
        """Test that n < 1 raises ValueError."""
        with pytest.raises(ValueError, match="n must be >= 1"):
            random_tree(0, random.Random(0))


class TestRandomGammaSpec:
    """Tests for random_gamma_spec."""

    def test_order_bound(self):
        """Test that every spec fits within n_max."""
        rng = random.Random(1)
        for _ in range(100):
            spec = random_gamma_spec(rng, 25)
            assert spec.order <= 25
            assert spec.d % 3 == 2

    def test_no_room(self):
        """Test that n_max too small for d = 2 raises ValueError."""
        with pytest.raises(ValueError, match="leaves no room"):
            random_gamma_spec(random.Random(0), 2)
