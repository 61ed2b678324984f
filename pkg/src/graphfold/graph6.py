"""graph6 text encoding for undirected graphs (single-byte sizes, n <= 62).

The format packs the upper triangle of the adjacency matrix, read column by
column, into printable ASCII six bits at a time.  It is the lingua franca of
graph-enumeration tooling, which is why catalogs here are stored in it.
"""

from __future__ import annotations

import os
from typing import Iterable

from .graphs import Graph

HEADER = ">>graph6<<"
_OFFSET = 63  # printable-ASCII bias; valid payload bytes are 63..126
_MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 text; `offset` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def encode(g: Graph) -> str:
    """Encode a graph with at most 62 vertices as one graph6 line."""
    n = g.n
    if n > _MAX_N:
        raise ValueError(f"graph6 single-byte size supports n <= {_MAX_N}, got {n}")
    chars = [chr(n + _OFFSET)]
    acc = 0
    nbits = 0
    for col in range(1, n):
        col_mask = g.masks[col]
        for row in range(col):
            acc = (acc << 1) | (col_mask >> row & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(acc + _OFFSET))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        chars.append(chr(acc + _OFFSET))
    return "".join(chars)


def decode(text: str) -> Graph:
    """Decode one graph6 line; the optional `>>graph6<<` header is ignored."""
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    if not line:
        raise Graph6Error("empty graph6 text", base)
    for i, ch in enumerate(line):
        code = ord(ch)
        if not _OFFSET <= code <= 126:
            raise Graph6Error(f"invalid graph6 byte {code!r}", base + i)
    n = ord(line[0]) - _OFFSET
    if n == _MAX_N + 1:
        raise Graph6Error("multi-byte graph6 sizes (n > 62) are not supported", base)
    need = (n * (n - 1) // 2 + 5) // 6
    body = line[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated graph6 body: need {need} bytes, have {len(body)}",
                          base + len(line))
    if len(body) > need:
        raise Graph6Error(f"trailing graph6 bytes: need {need}, have {len(body)}",
                          base + 1 + need)
    masks = [0] * n
    bit = 0
    nbits = n * (n - 1) // 2
    for i, ch in enumerate(body):
        group = ord(ch) - _OFFSET
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", base + 1 + i)
                continue
            if group >> k & 1:
                col = _col_of_bit(bit)
                row = bit - col * (col - 1) // 2
                masks[row] |= 1 << col
                masks[col] |= 1 << row
            bit += 1
    return Graph.from_masks(masks)


def _col_of_bit(bit: int) -> int:
    # bit index runs over columns 1.. with col-1, col-2, ... entries before it
    col = 1
    while col * (col + 1) // 2 <= bit:
        col += 1
    return col


def iter_lines(text: str) -> Iterable[str]:
    """Graph6 payload lines of a file body: headers, blanks, `#` comments skipped."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(HEADER):
            line = line[len(HEADER):].strip()
            if not line:
                continue
        yield line


def load_file(path: str | os.PathLike) -> list[Graph]:
    """Read every graph in a graph6 file."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    return [decode(line) for line in iter_lines(text)]
