"""Laplacian matrix L(G) = D(G) - A(G), as numpy integers or exact rationals."""

from fractions import Fraction

import numpy as np

from src.graph.core import Graph


def laplacian(graph: Graph) -> np.ndarray:
    """
    Integer Laplacian of a graph.

    Diagonal entries are degrees, off-diagonal entries are -1 on edges and 0
    elsewhere, so every row sums to zero.
    """
    matrix = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, v in graph.edges:
        matrix[u, v] = -1
        matrix[v, u] = -1
    matrix[np.diag_indices(graph.n)] = graph.degrees()
    return matrix


def shifted_laplacian(graph: Graph, alpha: Fraction) -> list[list[Fraction]]:
    """L(G) - alpha*I as nested lists of Fractions."""
    rows = [[Fraction(0)] * graph.n for _ in range(graph.n)]
    for u, v in graph.edges:
        rows[u][v] = Fraction(-1)
        rows[v][u] = Fraction(-1)
    for v in range(graph.n):
        rows[v][v] = Fraction(graph.degree(v)) - alpha
    return rows
