"""graph6 codec for graphs on at most 62 vertices (single size byte)."""

from __future__ import annotations

from .graph import MAX_VERTICES, SimpleGraph


class Graph6Error(ValueError):
    """Malformed graph6 input; ``position`` is the 0-based offset of the first bad byte."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte {position})")
        self.position = position


def emit_graph6(g: SimpleGraph) -> str:
    n = g.n
    if n > MAX_VERTICES:
        raise ValueError("graph6 size byte only covers n <= 62")
    out = [chr(n + 63)]
    acc = 0
    width = 0
    for j in range(1, n):
        r = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (r >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> SimpleGraph:
    line = text.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty graph6 line", 0)
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", pos)
    n = ord(line[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error("multi-byte size field (n > 62) not supported", 0)
    nbits = n * (n - 1) // 2
    need = 1 + (nbits + 5) // 6
    if len(line) != need:
        raise Graph6Error(f"expected {need} bytes for n={n}, got {len(line)}",
                          min(len(line), need))
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            chunk = ord(line[1 + bit // 6]) - 63
            if chunk >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (ord(line[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", len(line) - 1)
    return SimpleGraph(n, tuple(rows))
