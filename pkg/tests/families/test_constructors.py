"""
Tests for the family constructors.
"""

import pytest

from src.families.constructors import (
    double_starlike,
    gamma_attachment_vertices,
    gamma_tree,
    path,
    perfect_binary_tree,
    star,
)
from src.families.specs import FamilySpecError, make_double_star_spec, make_gamma_spec
from src.graph.core import Tree, pendant_vertices, tree_diameter


class TestBasicFamilies:
    """Tests for path, star and perfect_binary_tree."""

    def test_path_layout(self):
        """Test that P_5 is 0-1-2-3-4."""
        tree = path(5)

        assert isinstance(tree, Tree)
        assert tree.edges == ((0, 1), (1, 2), (2, 3), (3, 4))

    def test_star_centre(self):
        """Test that vertex 0 is the centre of K_{1,6}."""
        tree = star(7)

        assert tree.degree(0) == 6
        assert pendant_vertices(tree) == frozenset(range(1, 7))

    def test_single_vertex(self):
        """Test that n = 1 gives K_1 for both families."""
        assert path(1).m == 0
        assert star(1).m == 0

    @pytest.mark.parametrize("builder", [path, star])
    def test_empty_rejected(self, builder):
        """Test that n < 1 raises FamilySpecError."""
        with pytest.raises(FamilySpecError, match="n >= 1"):
            builder(0)

    def test_binary_tree(self):
        """Test the heap layout of a height-3 binary tree."""
        tree = perfect_binary_tree(3)

        assert tree.n == 15
        assert tree.adjacency[0] == (1, 2)
        assert tree.adjacency[1] == (0, 3, 4)
        assert len(pendant_vertices(tree)) == 8
        assert tree_diameter(tree) == 6

    def test_binary_tree_height(self):
        """Test height 0 and a negative height."""
        assert perfect_binary_tree(0).n == 1
        with pytest.raises(FamilySpecError):
            perfect_binary_tree(-1)


class TestGammaTree:
    """Tests for gamma_tree."""

    def test_attachment_vertices(self):
        """Test that d = 8 attaches to spine ids 1, 4, 7."""
        assert gamma_attachment_vertices(make_gamma_spec(8, "0,0,0")) == [1, 4, 7]

    def test_leaf_numbering(self):
        """Test that extra leaves are numbered from d + 1 in ascending part order."""
        tree = gamma_tree(make_gamma_spec(5, "2,1"))

        assert tree.n == 9
        assert tree.adjacency[1] == (0, 2, 6, 7)
        assert tree.adjacency[4] == (3, 5, 8)

    def test_diameter(self):
        """Test that extra leaves keep the diameter at d."""
        spec = make_gamma_spec(11, "3,0,2,5")

        assert tree_diameter(gamma_tree(spec)) == 11
        assert gamma_tree(spec).n == spec.order

    def test_bare_spine(self):
        """Test that all-zero parts give the path P_{d+1}."""
        assert gamma_tree(make_gamma_spec(5, "0,0")) == path(6)


class TestDoubleStarlike:
    """Tests for double_starlike."""

    def test_order_and_diameter(self):
        """Test T(5, 2, 3) has 9 vertices and diameter 5."""
        tree = double_starlike(make_double_star_spec(5, 2, 3))

        assert tree.n == 9
        assert tree_diameter(tree) == 5
        assert tree.degree(0) == 3
        assert tree.degree(3) == 4

    def test_diameter_two_is_a_star(self):
        """Test that T(2, p, q) is the star K_{1,p+q}."""
        tree = double_starlike(make_double_star_spec(2, 2, 3))

        assert tree.n == 6
        assert tree.degree(0) == 5
