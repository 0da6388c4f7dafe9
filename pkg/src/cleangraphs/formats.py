"""graph6 and edge-list reading and writing.

graph6: an optional ``>>graph6<<`` header, the vertex count N(n), then the
upper triangle of the adjacency matrix column by column
(``(0,1), (0,2), (1,2), (0,3), ...``) packed six bits per byte, each byte
offset by 63.  N(n) is one byte ``n + 63`` for ``n <= 62``, ``126`` plus
three bytes for ``n <= 258047``, and ``126 126`` plus six bytes beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph_core import Graph, build_graph

HEADER = b">>graph6<<"
MAX_N = (1 << 36) - 1


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class Graph6HeaderError(Graph6Error):
    pass


class Graph6ByteRangeError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6TrailingBytesError(Graph6Error):
    pass


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    labels: Mapping[str, int] | None = None
    source_format: str = "graph6"

    def __post_init__(self):
        if self.labels is not None and sorted(self.labels.values()) != list(range(self.graph.n)):
            raise ValueError("label map must be a bijection onto 0..n-1")


def _encode_n(n: int) -> bytes:
    if n < 0 or n > MAX_N:
        raise ValueError(f"graph6 cannot represent n={n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def emit_graph6(g: Graph, header: bool = False) -> bytes:
    """graph6 bytes for ``g`` (no trailing newline)."""
    out = bytearray(HEADER if header else b"")
    out += _encode_n(g.n)
    acc = nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(data: bytes | str) -> GraphDocument:
    """Parse one graph6 record; surrounding whitespace is ignored."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    lead = len(data) - len(data.lstrip())
    body = data.strip()
    pos = 0
    if body.startswith(b">>"):
        if not body.startswith(HEADER):
            raise Graph6HeaderError("malformed header", lead)
        pos = len(HEADER)

    def byte_at(p: int) -> int:
        if p >= len(body):
            raise Graph6TruncatedError("unexpected end of input", lead + p)
        b = body[p]
        if not 63 <= b <= 126:
            raise Graph6ByteRangeError(f"byte value {b} outside 63..126", lead + p)
        return b - 63

    first = byte_at(pos)
    if first < 63:
        n, pos = first, pos + 1
    elif byte_at(pos + 1) < 63:
        n = 0
        for p in range(pos + 1, pos + 4):
            n = (n << 6) | byte_at(p)
        pos += 4
    else:
        n = 0
        for p in range(pos + 2, pos + 8):
            n = (n << 6) | byte_at(p)
        pos += 8
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    rows = [0] * n
    i, j = 0, 1
    for p in range(pos, pos + need):
        chunk = byte_at(p)
        for s in range(5, -1, -1):
            if j >= n:
                break
            if chunk >> s & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    end = pos + need
    if end != len(body):
        raise Graph6TrailingBytesError("trailing bytes after graph", lead + end)
    return GraphDocument(Graph(n, tuple(rows)), None, "graph6")


def parse_edge_list(text: str) -> GraphDocument:
    """Whitespace-separated ``u v`` lines; ``#`` starts a comment.

    An optional first line ``n <count>`` fixes the vertex count (so isolated
    vertices survive); otherwise ``n`` is one more than the largest id.
    """
    n = None
    edges = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if line[0] == "n" and not seen_data:
            if len(line) != 2:
                raise EdgeListError("header must be 'n <count>'", lineno)
            n = _int_token(line[1], lineno)
            seen_data = True
            continue
        seen_data = True
        if len(line) != 2:
            raise EdgeListError(f"expected two vertex ids, got {len(line)} tokens", lineno)
        u, v = (_int_token(tok, lineno) for tok in line)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if n is not None and max(u, v) >= n:
            raise EdgeListError(f"vertex id {max(u, v)} not below n={n}", lineno)
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return GraphDocument(build_graph(n, edges), None, "edges")


def _int_token(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise EdgeListError(f"non-integer token {tok!r}", lineno) from None
    if value < 0:
        raise EdgeListError(f"negative vertex id {value}", lineno)
    return value


def emit_edge_list(doc: GraphDocument | Graph) -> str:
    g = doc.graph if isinstance(doc, GraphDocument) else doc
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(data: bytes, fmt: str) -> GraphDocument:
    if fmt == "graph6":
        return parse_graph6(data)
    if fmt == "edges":
        return parse_edge_list(data.decode("utf-8"))
    raise ValueError(f"unknown format {fmt!r}")
