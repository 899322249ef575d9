"""graph6 and plain edge-list readers/writers.

graph6 layout: a size field, then the upper triangle of the adjacency matrix
read column by column (x01, x02, x12, x03, ...) packed big-endian into 6-bit
chunks, each offset by 63. Only the 1-byte (n <= 62) and 4-byte
(n <= 258047) size forms are supported.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from aalpha.graph import Graph, GraphError, from_edges

MAX_ORDER = 258047


class FormatError(ValueError):
    """Raised for malformed graph6 records or edge-list text."""


def _size_field(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= MAX_ORDER:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise FormatError(f"order {n} exceeds the supported graph6 range (<= {MAX_ORDER})")


def _payload_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def write_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise FormatError(f"order {g.n} exceeds the supported graph6 range (<= {MAX_ORDER})")
    out = bytearray(_size_field(g.n))
    chunk = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            chunk = (chunk << 1) | g.has_edge(i, j)
            nbits += 1
            if nbits == 6:
                out.append(chunk + 63)
                chunk = nbits = 0
    if nbits:
        out.append((chunk << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, str):
        try:
            data = line.rstrip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise FormatError("graph6 records are ASCII") from exc
    else:
        data = line.rstrip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise FormatError("empty graph6 record")
    bad = [b for b in data if not 63 <= b <= 126]
    if bad:
        raise FormatError(f"byte {bad[0]} outside [63, 126]")

    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n < 63:
            raise FormatError("4-byte size field used for n < 63")
        body = data[4:]
    else:
        raise FormatError("malformed or unsupported graph6 size field")
    if n < 1:
        raise FormatError("graph6 record encodes an empty vertex set")

    expected = _payload_length(n)
    if len(body) != expected:
        raise FormatError(f"expected {expected} payload bytes for n={n}, got {len(body)}")

    total = n * (n - 1) // 2
    pad = expected * 6 - total
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one record per non-blank line."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"i j"`` (0-indexed, '#' comments)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}") from exc
    if not rows:
        raise FormatError("missing 'n m' header")
    (n, m), edge_rows = rows[0], rows[1:]
    if len(edge_rows) != m:
        raise FormatError(f"header declares {m} edges but {len(edge_rows)} were listed")
    try:
        g = from_edges(n, edge_rows)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc
    if g.m != m:
        raise FormatError("edge list repeats an edge")
    return g


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{i} {j}" for i, j in edges]
    return "\n".join(lines) + "\n"
