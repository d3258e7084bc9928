"""graph6 and edge-list serialization, bit-exact and strict.

graph6 records are the standard printable encoding: a 63-biased length
prefix, then the upper triangle of the adjacency matrix in column-major
order ((0,1),(0,2),(1,2),(0,3),...) packed 6 bits per byte, zero-padded.
The same column-major pair order is reused by the canonical-form machinery.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import MAX_VERTICES, Graph, GraphError


class CodecError(GraphError):
    """Parse failure; `offset` is the byte position in the input string."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


_HEADER = ">>graph6<<"


@lru_cache(maxsize=None)
def colex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs (i, j), i < j, in graph6 column-major order."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


def graph_to_bits(G: Graph) -> int:
    """Upper-triangle adjacency packed as an int, bit c for colex pair c."""
    bits = 0
    for c, (i, j) in enumerate(colex_pairs(G.n)):
        if G.rows[i] >> j & 1:
            bits |= 1 << c
    return bits


def graph_from_bits(n: int, bits: int) -> Graph:
    """Inverse of graph_to_bits."""
    pairs = colex_pairs(n)
    rows = [0] * n
    while bits:
        low = bits & -bits
        bits ^= low
        i, j = pairs[low.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph.from_rows(n, tuple(rows))


def emit_graph6(G: Graph) -> str:
    n = G.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    npairs = n * (n - 1) // 2
    stream = []
    acc = 0
    filled = 0
    for i, j in colex_pairs(n):
        acc = (acc << 1) | (G.rows[i] >> j & 1)
        filled += 1
        if filled == 6:
            stream.append(chr(acc + 63))
            acc = 0
            filled = 0
    if filled:
        stream.append(chr((acc << (6 - filled)) + 63))
    assert len(stream) == (npairs + 5) // 6
    return head + "".join(stream)


def parse_graph6(text: str) -> Graph:
    base = 0
    if text.startswith(_HEADER):
        base = len(_HEADER)
        text = text[base:]
    text = text.rstrip("\n")
    if not text:
        raise CodecError("empty graph6 record", base)
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise CodecError(f"invalid graph6 character {ch!r}", base + pos)
    if text[0] != "~":
        n = ord(text[0]) - 63
        body_at = 1
    else:
        if len(text) >= 2 and text[1] == "~":
            raise CodecError("graphs beyond 258047 vertices are not supported", base + 1)
        if len(text) < 4:
            raise CodecError("truncated long-form vertex count", base + len(text))
        n = 0
        for ch in text[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body_at = 4
    if n > MAX_VERTICES:
        raise CodecError(f"vertex count {n} exceeds the supported cap {MAX_VERTICES}", base)
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = text[body_at:]
    if len(body) != nbytes:
        raise CodecError(
            f"expected {nbytes} data bytes for n={n}, got {len(body)}",
            base + body_at + min(len(body), nbytes),
        )
    rows = [0] * n
    pairs = colex_pairs(n)
    for byte_idx, ch in enumerate(body):
        val = ord(ch) - 63
        for bit in range(6):
            c = byte_idx * 6 + bit
            if (val >> (5 - bit)) & 1:
                if c >= npairs:
                    raise CodecError("nonzero padding bits", base + body_at + byte_idx)
                i, j = pairs[c]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph.from_rows(n, tuple(rows))


def emit_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise CodecError("empty edge list", 0)
    head = lines[0].split()
    if len(head) != 2:
        raise CodecError(f"header must be 'n m', got {lines[0]!r}", 0)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise CodecError(f"non-numeric header {lines[0]!r}", 0) from None
    if len(lines) - 1 != m:
        raise CodecError(f"header announces {m} edges, found {len(lines) - 1}", 0)
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise CodecError(f"edge line must be 'u v', got {ln!r}", 0)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise CodecError(f"non-numeric edge line {ln!r}", 0) from None
    return Graph(n, edges)


def parse_graph_auto(text: str) -> Graph:
    """Edge list when the record starts with a digit, graph6 otherwise."""
    stripped = text.lstrip()
    if stripped and stripped[0].isdigit():
        return parse_edge_list(text)
    return parse_graph6(stripped.splitlines()[0] if stripped else "")
