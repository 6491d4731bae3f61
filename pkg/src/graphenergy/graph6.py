"""Strict encoder/decoder for the short-form graph6 text format.

Only the header-less short form (n <= 62) is supported.  The decoder is
deliberately strict: byte values outside 63..126, truncated bodies, and
nonzero padding bits are all rejected with the offending position, because
bit-exactness is this module's contract.
"""

from __future__ import annotations

from .graphs import Graph

MAX_VERTICES = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; position points at the offending byte/bit."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at byte {position})"
        super().__init__(message)


class UnsupportedGraph6Error(Graph6Error):
    """Well-formed but outside the supported short form (n <= 62)."""


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def decode(code: str) -> Graph:
    """Decode a short-form graph6 string into a Graph.

    The first byte carries n (value - 63); the remaining bytes carry the
    upper triangle of the adjacency matrix column by column, six bits per
    byte, most significant bit first, zero-padded at the end.
    """
    if not code:
        raise Graph6Error("empty graph6 string", 0)
    raw = code.encode("ascii", errors="strict") if _is_ascii(code) else None
    if raw is None:
        raise Graph6Error("graph6 strings must be ASCII", 0)
    first = raw[0]
    if first == ord(":"):
        raise UnsupportedGraph6Error("sparse6 input is not supported", 0)
    if first == ord("&"):
        raise UnsupportedGraph6Error("digraph6 input is not supported", 0)
    if code.startswith(">>"):
        raise UnsupportedGraph6Error("headered graph6 input is not supported", 0)
    if first == 126:
        raise UnsupportedGraph6Error("long-form graph6 (n > 62) is not supported", 0)
    if not (63 <= first <= 126):
        raise Graph6Error(f"byte {first} outside printable range 63..126", 0)
    n = first - 63
    bits_needed = _pair_count(n)
    body_len = (bits_needed + 5) // 6
    if len(raw) - 1 < body_len:
        raise Graph6Error(
            f"truncated bit stream: need {body_len} body bytes, got {len(raw) - 1}",
            len(raw),
        )
    if len(raw) - 1 > body_len:
        raise Graph6Error(f"trailing data beyond {body_len} body bytes", body_len + 1)

    bits: list[int] = []
    for pos in range(1, len(raw)):
        byte = raw[pos]
        if not (63 <= byte <= 126):
            raise Graph6Error(f"byte {byte} outside printable range 63..126", pos)
        group = byte - 63
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))

    for k in range(bits_needed, len(bits)):
        if bits[k]:
            raise Graph6Error("nonzero padding bit", 1 + k // 6)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode(g: Graph) -> str:
    """Encode a graph as short-form graph6; inverse of decode for n <= 62."""
    if g.n > MAX_VERTICES:
        raise UnsupportedGraph6Error(
            f"short-form graph6 supports at most {MAX_VERTICES} vertices, got {g.n}"
        )
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        group = 0
        for bit in bits[k : k + 6]:
            group = (group << 1) | bit
        out.append(chr(group + 63))
    return "".join(out)


def _is_ascii(text: str) -> bool:
    try:
        text.encode("ascii")
        return True
    except UnicodeEncodeError:
        return False
