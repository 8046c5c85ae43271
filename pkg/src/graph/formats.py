"""
Graph interchange formats: graph6 and plain edge lists.

graph6 (bit-exact with the standard definition):
    N(n) header - one byte n+63 for n <= 62, '~' + 3 bytes for n <= 258047,
    '~~' + 6 bytes above that; then the upper triangle of the adjacency
    matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
    packed six bits per byte, each byte offset by 63, padded with zeros.

Edge list:
    First line "n m", then m lines "u v". Blank lines and lines starting
    with '#' are ignored.
"""

import logging
from collections.abc import Iterator
from pathlib import Path

from src.graph.core import Graph, GraphError, from_edge_list

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
_MIN_BYTE = 63
_MAX_BYTE = 126
_SMALL_N = 62
_MEDIUM_N = 258047


class GraphFormatError(GraphError):
    """Input text could not be decoded into a graph."""


class Graph6Error(GraphFormatError):
    """
    Malformed graph6 text.

    Attributes:
        reason: "malformed byte", "truncated" or "length mismatch"
    """

    def __init__(self, reason: str, detail: str):
        super().__init__(f"graph6 {reason}: {detail}")
        self.reason = reason


class EdgeListError(GraphFormatError):
    """Malformed edge-list text."""


def _encode_n(n: int) -> list[int]:
    if n <= _SMALL_N:
        return [n + _MIN_BYTE]
    if n <= _MEDIUM_N:
        return [_MAX_BYTE] + [((n >> shift) & 0x3F) + _MIN_BYTE for shift in (12, 6, 0)]
    return [_MAX_BYTE, _MAX_BYTE] + [
        ((n >> shift) & 0x3F) + _MIN_BYTE for shift in (30, 24, 18, 12, 6, 0)
    ]


def _decode_n(data: list[int]) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise Graph6Error("truncated", "empty input")
    if data[0] != _MAX_BYTE:
        return data[0] - _MIN_BYTE, 1
    if len(data) >= 2 and data[1] == _MAX_BYTE:
        if len(data) < 8:
            raise Graph6Error("truncated", "incomplete 8-byte size header")
        n = 0
        for value in data[2:8]:
            n = (n << 6) | (value - _MIN_BYTE)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated", "incomplete 4-byte size header")
    n = 0
    for value in data[1:4]:
        n = (n << 6) | (value - _MIN_BYTE)
    return n, 4


def to_graph6(graph: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    n = graph.n
    bits: list[int] = []
    for j in range(1, n):
        nbrs = set(graph.adjacency[j])
        bits.extend(1 if i in nbrs else 0 for i in range(j))

    bits.extend([0] * (-len(bits) % 6))
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start : start + 6]:
            value = (value << 1) | bit
        body.append(value + _MIN_BYTE)

    return bytes(_encode_n(n) + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 string.

    A leading ">>graph6<<" header and surrounding whitespace are ignored.

    Raises:
        Graph6Error: On a byte outside 63..126, nonzero padding bits, a
            truncated bit stream or trailing bytes beyond the encoded triangle
    """
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]

    data = [ord(ch) for ch in text]
    for pos, value in enumerate(data):
        if not _MIN_BYTE <= value <= _MAX_BYTE:
            raise Graph6Error("malformed byte", f"{chr(value)!r} at position {pos}")

    n, offset = _decode_n(data)
    if n < 1:
        raise Graph6Error("malformed byte", "graph6 encodes a graph with no vertices")

    expected = (n * (n - 1) // 2 + 5) // 6
    body = data[offset:]
    if len(body) < expected:
        raise Graph6Error("truncated", f"expected {expected} data bytes, got {len(body)}")
    if len(body) > expected:
        raise Graph6Error("length mismatch", f"expected {expected} data bytes, got {len(body)}")
    padding = 6 * expected - n * (n - 1) // 2
    if padding and (body[-1] - _MIN_BYTE) & ((1 << padding) - 1):
        detail = f"nonzero padding bits in final byte {chr(body[-1])!r}"
        raise Graph6Error("malformed byte", detail)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            value = body[k // 6] - _MIN_BYTE
            if (value >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1

    return from_edge_list(n, edges)


def to_edge_list(graph: Graph) -> str:
    """Plain-text edge list: "n m" then one "u v" line per edge."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """
    Decode the plain-text edge-list format.

    Raises:
        EdgeListError: On a bad header, non-integer tokens or an edge count
            that disagrees with the header
        GraphError: If the edges violate the graph invariants
    """
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append(line.split())

    if not rows:
        raise EdgeListError("empty edge list")

    try:
        header = [int(tok) for tok in rows[0]]
        pairs = [tuple(int(tok) for tok in row) for row in rows[1:]]
    except ValueError as e:
        raise EdgeListError(f"non-integer token: {e}") from e

    if len(header) != 2:
        raise EdgeListError(f"header must be 'n m', got {' '.join(rows[0])!r}")
    n, m = header
    if any(len(pair) != 2 for pair in pairs):
        raise EdgeListError("every edge line must hold exactly two vertex ids")
    if len(pairs) != m:
        raise EdgeListError(f"header announces {m} edges, found {len(pairs)}")

    return from_edge_list(n, pairs)


def detect_format(text: str) -> str:
    """Guess "edges" or "graph6" from the first meaningful line."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return "edges" if " " in line or line.isdigit() else "graph6"
    return "graph6"


def parse_graph_text(text: str, fmt: str = "auto") -> Graph:
    """Decode a single graph in the given format ("graph6", "edges" or "auto")."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise Graph6Error("length mismatch", f"expected one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "edges":
        return parse_edge_list(text)
    raise GraphFormatError(f"unknown format {fmt!r}; expected 'graph6' or 'edges'")


def format_graph(graph: Graph, fmt: str = "graph6") -> str:
    """Encode a graph as text in the given format, newline-terminated."""
    if fmt == "graph6":
        return to_graph6(graph) + "\n"
    if fmt == "edges":
        return to_edge_list(graph)
    raise GraphFormatError(f"unknown format {fmt!r}; expected 'graph6' or 'edges'")


def read_graph(path: Path | str, fmt: str = "auto") -> Graph:
    """Read one graph from a file."""
    return parse_graph_text(Path(path).read_text(encoding="ascii"), fmt)


def write_graph(graph: Graph, path: Path | str, fmt: str = "graph6") -> Path:
    """Write one graph to a file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_graph(graph, fmt), encoding="ascii")
    logger.debug(f"Wrote {fmt} graph on {graph.n} vertices to {path}")
    return path


def iter_graph6_file(path: Path | str) -> Iterator[Graph]:
    """Stream graphs from a file holding one graph6 string per line."""
    with open(path, encoding="ascii") as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line)
            except Graph6Error as e:
                raise Graph6Error(e.reason, f"line {lineno}: {e}") from e
