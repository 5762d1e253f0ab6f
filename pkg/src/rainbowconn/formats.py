"""Text formats for graphs, colorings, and their round-trip parsers.

Edge-list format: first line ``n m``, then exactly m lines ``u v`` with
0-based endpoints, ASCII, LF line endings, no comments.

graph6 format: one printable-ASCII token -- byte n+63 (n <= 62 here, and
capped at 16 by the graph type), followed by the upper triangle of the
adjacency matrix in column order, packed 6 bits per byte with value+63 and
zero padding. The optional ``>>graph6<<`` header is rejected, not skipped,
so that fixtures stay canonical.

Coloring format: m lines ``u v c``; every edge of the target graph exactly
once.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, build_graph
from .rainbow import ColoringError, EdgeColoring

EDGELIST = "edgelist"
GRAPH6 = "graph6"
FORMATS = (EDGELIST, GRAPH6)


class ParseError(ValueError):
    """Input text rejected; message carries line/column diagnostics."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _int_token(tok: str, line: int, column: int, what: str) -> int:
    if not tok.lstrip("-").isdigit():
        raise ParseError(line, column, f"expected an integer {what}, got {tok!r}")
    return int(tok)


def _split_columns(text: str) -> list[tuple[int, list[tuple[int, str]]]]:
    """Non-blank lines as (line number, [(column, token), ...])."""
    out = []
    for i, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        tokens = []
        col = 0
        for tok in line.split(" "):
            if tok:
                tokens.append((col + 1, tok))
            col += len(tok) + 1
        out.append((i, tokens))
    return out


def parse_edgelist(text: str) -> Graph:
    rows = _split_columns(text)
    if not rows:
        raise ParseError(1, 1, "empty input, expected a header line 'n m'")
    line_no, header = rows[0]
    if len(header) != 2:
        raise ParseError(line_no, 1, "header must be exactly 'n m'")
    n = _int_token(header[0][1], line_no, header[0][0], "vertex count")
    m = _int_token(header[1][1], line_no, header[1][0], "edge count")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(
            body[-1][0] if body else line_no,
            1,
            f"header announces {m} edges but {len(body)} edge lines follow",
        )
    edges = []
    for line_no, tokens in body:
        if len(tokens) != 2:
            raise ParseError(line_no, 1, "edge line must be exactly 'u v'")
        u = _int_token(tokens[0][1], line_no, tokens[0][0], "endpoint")
        v = _int_token(tokens[1][1], line_no, tokens[1][0], "endpoint")
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(rows[0][0], 1, str(exc)) from exc


def render_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _triangle_bits(g: Graph) -> list[int]:
    # upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    return [
        1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)
    ]


def render_graph6(g: Graph) -> str:
    bits = _triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    token = text.strip()
    if token.startswith(">>"):
        raise ParseError(1, 1, "graph6 header lines are rejected, not skipped")
    if not token:
        raise ParseError(1, 1, "empty graph6 input")
    for col, ch in enumerate(token, start=1):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(1, col, f"byte {ch!r} outside the graph6 range")
    n = ord(token[0]) - 63
    if n > 62:
        raise ParseError(1, 1, "multi-byte graph6 orders are not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(token) != expected:
        raise ParseError(
            1,
            len(token),
            f"graph6 token for n={n} must be {expected} bytes, got {len(token)}",
        )
    bits = []
    for ch in token[1:]:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError(1, len(token), "nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(1, 1, str(exc)) from exc


def parse_graph(text: str, fmt: str = EDGELIST) -> Graph:
    if fmt == EDGELIST:
        return parse_edgelist(text)
    if fmt == GRAPH6:
        return parse_graph6(text)
    raise GraphError(f"unknown format {fmt!r}")


def render_graph(g: Graph, fmt: str = EDGELIST) -> str:
    if fmt == EDGELIST:
        return render_edgelist(g)
    if fmt == GRAPH6:
        return render_graph6(g) + "\n"
    raise GraphError(f"unknown format {fmt!r}")


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """Read ``u v c`` lines covering each edge of ``g`` exactly once."""
    mapping: dict[tuple[int, int], int] = {}
    for line_no, tokens in _split_columns(text):
        if len(tokens) != 3:
            raise ParseError(line_no, 1, "coloring line must be 'u v c'")
        u = _int_token(tokens[0][1], line_no, tokens[0][0], "endpoint")
        v = _int_token(tokens[1][1], line_no, tokens[1][0], "endpoint")
        c = _int_token(tokens[2][1], line_no, tokens[2][0], "color")
        if c < 0:
            raise ParseError(line_no, tokens[2][0], "colors must be >= 0")
        key = (u, v) if u < v else (v, u)
        if key in mapping:
            raise ParseError(line_no, 1, f"edge {key} colored twice")
        mapping[key] = c
    try:
        return EdgeColoring.for_graph(g, mapping)
    except ColoringError as exc:
        raise ParseError(1, 1, str(exc)) from exc


def render_coloring(c: EdgeColoring) -> str:
    lines = [f"{u} {v} {col}" for (u, v), col in zip(c.edges, c.colors)]
    return "\n".join(lines) + "\n"
