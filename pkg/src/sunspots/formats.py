"""graph6 and plain edge-list encodings.

graph6: size prefix N(n), then the upper triangle of the adjacency matrix in
column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte,
each byte offset by 63.  Padding bits at the end must be zero.

Edge list: a header line ``n m`` followed by ``m`` lines ``u v``.  Blank lines
and ``#`` comments are ignored.
"""
from __future__ import annotations

import sys
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError, build_graph

HEADER = ">>graph6<<"


class FormatError(GraphError):
    pass


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise FormatError(f"negative vertex count {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError(f"vertex count {n} too large for graph6")


def serialize_graph6(G: Graph) -> str:
    out = bytearray(_encode_size(G.n))
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        row = G.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; errors report the offending byte offset."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = s.encode("ascii", errors="replace")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise FormatError(f"graph6: byte {pos} ({chr(byte)!r}) outside 63..126")
    if not data:
        raise FormatError("graph6: empty string")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("graph6: truncated 8-byte size field at byte 2")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise FormatError("graph6: truncated 4-byte size field at byte 1")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(data) != expected:
        raise FormatError(
            f"graph6: expected {expected} bytes for n={n}, got {len(data)} "
            f"(mismatch at byte {min(len(data), expected)})"
        )
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for offset in range(pos, expected):
        chunk = data[offset] - 63
        for shift in range(5, -1, -1):
            bit = chunk >> shift & 1
            if k < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise FormatError(f"graph6: nonzero padding bit in byte {offset}")
    return Graph(n, tuple(rows))


def serialize_edgelist(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("edge list: missing 'n m' header")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise FormatError(f"edge list: bad header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"edge list: header promises {m} edges, found {len(body)}")
    edges = []
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"edge list: line {lineno} is not 'u v': {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"edge list: line {lineno} has a non-integer vertex: {ln!r}") from None
    try:
        return build_graph(n, edges)
    except GraphError as err:
        raise FormatError(f"edge list: {err}") from None


def _looks_like_edgelist(lines: list[str]) -> bool:
    first = lines[0].split()
    return len(first) == 2 and all(t.lstrip("-").isdigit() for t in first)


def parse_graphs(text: str) -> list[Graph]:
    """Parse either an edge-list document or graph6 lines (one graph per line)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        return []
    if _looks_like_edgelist(lines):
        return [parse_edgelist(text)]
    return [parse_graph6(ln) for ln in lines]


def read_graphs(source: str | Path | TextIO) -> list[Graph]:
    """Read graphs from a path, ``"-"`` for stdin, or an open text stream."""
    if source == "-":
        return parse_graphs(sys.stdin.read())
    if hasattr(source, "read"):
        return parse_graphs(source.read())  # type: ignore[union-attr]
    return parse_graphs(Path(source).read_text())


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for G in graphs:
        stream.write(serialize_graph6(G) + "\n")


def iter_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        for ln in fh:
            ln = ln.strip()
            if ln and not ln.startswith("#"):
                yield parse_graph6(ln)
