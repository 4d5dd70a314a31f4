"""graph6 encoding (n <= 62, single-byte header)."""

from __future__ import annotations

from ..graph import Graph

MAX_N = 62


class Graph6Error(ValueError):
    pass


def _slots(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise Graph6Error(f"graph6 short form supports n <= {MAX_N}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _slots(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        out.append(chr(63 + v))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise Graph6Error(f"invalid graph6 character in {text!r}")
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise Graph6Error("multi-byte graph6 headers (n > 62) are not supported")
    nslots = n * (n - 1) // 2
    need = -(-nslots // 6)
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(f"truncated graph6: {len(body)} data bytes, need {need}")
    if len(body) > need:
        raise Graph6Error(f"trailing data in graph6: {len(body)} data bytes, expected {need}")
    bits = []
    for c in body:
        v = ord(c) - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nslots:]):
        raise Graph6Error("nonzero padding bits")
    edges = [e for e, b in zip(_slots(n), bits) if b]
    return Graph.from_edges(n, edges)
