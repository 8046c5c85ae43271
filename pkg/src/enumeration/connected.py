"""
Connected graphs of small order, one per isomorphism class.

Every labeled edge set on n vertices is scanned as a bitmask. Only labelings
whose degree sequence is non-increasing in vertex id go on to the
connectivity test and canonical dedupe; every isomorphism class has such a
labeling, so nothing is lost.
"""

import logging
from collections.abc import Iterator
from itertools import combinations

from src.core.errors import CapExceededError
from src.enumeration.canonical import canonical_code
from src.graph.core import Graph, from_edge_list, is_connected

logger = logging.getLogger(__name__)

DEFAULT_GRAPH_CAP = 7


def connected_graphs(n: int, graph_cap: int = DEFAULT_GRAPH_CAP) -> Iterator[Graph]:
    """
    Representatives of all connected simple graphs on n vertices.

    Emission order is deterministic: by first labeled occurrence in bitmask
    order.

    Raises:
        ValueError: If n < 1
        CapExceededError: If n exceeds graph_cap
    """
    if n < 1:
        raise ValueError(f"graph order must be >= 1, got {n}")
    if n > graph_cap:
        raise CapExceededError("connected graph enumeration", n, graph_cap)

    pairs = list(combinations(range(n), 2))
    incident = [0] * n
    for bit, (u, v) in enumerate(pairs):
        incident[u] |= 1 << bit
        incident[v] |= 1 << bit

    seen: set[bytes] = set()
    scanned = 0
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        degrees = [(mask & inc).bit_count() for inc in incident]
        if any(degrees[i] < degrees[i + 1] for i in range(n - 1)):
            continue
        scanned += 1
        graph = from_edge_list(n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])
        if not is_connected(graph):
            continue
        code = canonical_code(graph)
        if code in seen:
            continue
        seen.add(code)
        yield graph

    logger.debug(f"n={n}: {scanned} sorted-degree labelings, {len(seen)} connected classes")
