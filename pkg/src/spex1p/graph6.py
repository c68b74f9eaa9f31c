"""graph6 text encoding (the nauty/gtools format), short and extended size forms."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, msg: str, offset: int, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{msg} (byte offset {offset})")
        self.msg = msg
        self.offset = offset
        self.line = line


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} too large for graph6")


def graph6_encode(g: Graph) -> str:
    """Return the graph6 string for ``g`` (no header, no newline)."""
    n = g.n
    bits = []
    adj = g.adj
    # upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chunks.append(chr(val + 63))
    return _encode_n(n) + "".join(chunks)


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field", len(data))
        vals, start = data[2:8], 2
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size field", len(data))
        vals, start = data[1:4], 1
    n = 0
    for k, c in enumerate(vals):
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid size byte {c!r}", start + k)
        n = n << 6 | (c - 63)
    return n, start + len(vals)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(text)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", pos + min(len(body), need))
    edges = set()
    k = 0
    i, j = 0, 1
    for off, c in enumerate(body):
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid data byte {c!r}", pos + off)
        val = c - 63
        for s in range(5, -1, -1):
            if k >= nbits:
                if val >> s & 1:
                    raise Graph6Error("nonzero padding bit", pos + off)
                continue
            if val >> s & 1:
                edges.add((i, j))
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, frozenset(edges))


def read_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield (line number, graph) for each non-blank line; errors carry the line number."""
    for lineno, line in enumerate(lines, 1):
        s = line.strip()
        if not s:
            continue
        try:
            yield lineno, graph6_decode(s)
        except Graph6Error as exc:
            raise Graph6Error(exc.msg, exc.offset, lineno) from None


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> None:
    for g in graphs:
        out.write(graph6_encode(g) + "\n")
