"""Random instances for the property suites: Prüfer trees and Γ specs."""

import heapq
import logging
import random

from src.families.specs import GammaSpec
from src.graph.core import Tree, tree_from_edge_list

logger = logging.getLogger(__name__)


def tree_from_prufer(sequence: list[int]) -> Tree:
    """
    Decode a Prüfer sequence of length n - 2 over 0..n-1 into a labeled tree.

    Each step joins the smallest current leaf to the next sequence entry.
    """
    n = len(sequence) + 2
    for x in sequence:
        if not 0 <= x < n:
            raise ValueError(f"Prüfer entry {x} out of range for n={n}")

    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)

    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)

    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return tree_from_edge_list(n, edges)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniformly random labeled tree on n vertices."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return tree_from_edge_list(1, [])
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])


def random_gamma_spec(rng: random.Random, n_max: int = 40) -> GammaSpec:
    """
    Random GammaSpec with order at most n_max.

    Picks d uniformly among the admissible diameters, then drops the spare
    vertices one at a time into random parts.
    """
    diameters = [d for d in range(2, n_max) if d % 3 == 2]
    if not diameters:
        raise ValueError(f"n_max={n_max} leaves no room for a Γ member")
    d = rng.choice(diameters)
    k = (d + 1) // 3
    spare = rng.randint(0, n_max - d - 1)
    parts = [0] * k
    for _ in range(spare):
        parts[rng.randrange(k)] += 1
    return GammaSpec(d=d, parts=tuple(parts))
