"""graph6 encoding and decoding.

The graph6 format stores an order header followed by the upper triangle
of the adjacency matrix in column-major order, six bits per printable
character (offset 63).  Orders up to 62 use a single byte; 63..258047
use a tilde and three bytes.  Lines may carry the optional
">>graph6<<" prefix.
"""
from __future__ import annotations

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class MalformedLineError(ValueError):
    """Input line is not valid graph6; carries the 1-based line number."""

    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno


class OrderTooLargeError(ValueError):
    """Encoded order exceeds what this library handles."""

    def __init__(self, lineno: int, order: int):
        super().__init__(f"line {lineno}: order {order} above {MAX_ORDER}")
        self.lineno = lineno
        self.order = order


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    acc = 0
    nbits = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return "".join(map(chr, out))


def decode_graph6(line: str, lineno: int = 1) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise MalformedLineError(lineno, "empty record")
    data = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise MalformedLineError(lineno, f"byte {ch!r} outside graph6 range")
        data.append(c)
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise MalformedLineError(lineno, "truncated order field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        # 8-byte order form encodes n > 258047, necessarily over the cap
        if len(data) < 8:
            raise MalformedLineError(lineno, "truncated order field")
        n = 0
        for c in data[2:8]:
            n = n << 6 | c
        raise OrderTooLargeError(lineno, n)
    if n > MAX_ORDER:
        raise OrderTooLargeError(lineno, n)
    if n == 0:
        raise MalformedLineError(lineno, "empty graph not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MalformedLineError(
            lineno, f"expected {need} payload bytes, got {len(body)}"
        )
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    if need and body[-1] & (1 << (6 * need - idx)) - 1:
        raise MalformedLineError(lineno, "nonzero padding bits")
    return Graph.from_rows(rows)


def read_graph6(lines):
    """Yield Graphs from an iterable of text lines.

    Blank lines and a leading format header are skipped; anything else
    that fails to parse raises MalformedLineError or OrderTooLargeError
    with the offending line number.
    """
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if s.startswith(HEADER):
            s = s[len(HEADER) :]
        if not s:
            continue
        yield decode_graph6(s, lineno)


def write_graph6(graphs, stream) -> int:
    count = 0
    for g in graphs:
        stream.write(encode_graph6(g) + "\n")
        count += 1
    return count
