"""graph6 reading and writing (McKay's format, labelled, no canonicalisation)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_VERTICES, Graph


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def _decode_n(text: str) -> tuple[int, int]:
    """Return (n, header length)."""
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(text[:4]):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)!r} outside graph6 range 63..126", i)
    if text[0] != "~":
        return ord(text[0]) - 63, 1
    if text[1:2] == "~":
        raise Graph6Error(f"8-byte size header not supported (n > {MAX_VERTICES})", 1)
    if len(text) < 4:
        raise Graph6Error("truncated size header", len(text))
    n = 0
    for ch in text[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[10:]
    n, start = _decode_n(line)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[start:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field: need {nbytes} data bytes, got {len(body)}",
                          start + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after bit field", start + nbytes)
    value = 0
    for i, ch in enumerate(body):
        d = ord(ch) - 63
        if not 0 <= d <= 63:
            raise Graph6Error(f"byte {ord(ch)!r} outside graph6 range 63..126", start + i)
        value = (value << 6) | d
    pad = nbytes * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", start + nbytes - 1)
    value >>= pad
    rows = [0] * n
    # bits run over the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise Graph6Error(f"n={g.n} above cap {MAX_VERTICES}", 0)
    nbits = g.n * (g.n - 1) // 2
    nbytes = (nbits + 5) // 6
    value = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
    value <<= nbytes * 6 - nbits
    data = [chr(((value >> (6 * (nbytes - 1 - i))) & 63) + 63) for i in range(nbytes)]
    return _encode_n(g.n) + "".join(data)


def read_graph6_lines(stream: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (line number, graph6 text) for the non-blank, non-comment lines."""
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> None:
    for g in graphs:
        out.write(emit_graph6(g) + "\n")
