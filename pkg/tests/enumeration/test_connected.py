"""
Tests for connected graph enumeration.

Counts are OEIS A001349: 1, 1, 2, 6, 21, 112, 853.
"""

from itertools import combinations

import networkx as nx
import pytest

from src.core.errors import CapExceededError
from src.enumeration.connected import connected_graphs
from src.graph.core import is_connected


class TestConnectedGraphs:
    """Tests for connected_graphs."""

    @pytest.mark.parametrize(("n", "expected"), [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
    def test_counts(self, n, expected):
        """Test the number of connected graphs of each order."""
        assert sum(1 for _ in connected_graphs(n)) == expected

    @pytest.mark.slow
    def test_order_seven(self):
        """Test the 853 connected graphs on seven vertices."""
        assert sum(1 for _ in connected_graphs(7)) == 853

    def test_pairwise_non_isomorphic(self):
        """Test the 21 graphs of order 5 with networkx."""
        graphs = []
        for graph in connected_graphs(5):
            assert is_connected(graph)
            g = nx.Graph()
            g.add_nodes_from(range(graph.n))
            g.add_edges_from(graph.edges)
            graphs.append(g)

        for a, b in combinations(graphs, 2):
            assert not nx.is_isomorphic(a, b)

    def test_cap(self):
        """Test that orders above the cap raise CapExceededError."""
        with pytest.raises(CapExceededError):
            list(connected_graphs(8))

    def test_invalid_order(self):
        """Test that n < 1 raises ValueError."""
        with pytest.raises(ValueError, match="graph order must be >= 1"):
            list(connected_graphs(0))
