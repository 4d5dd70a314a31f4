"""Simple undirected graphs stored as packed bit rows, plus metric helpers.

Vertices are ``0..n-1``; row ``i`` is an int whose bit ``j`` is set iff
``i`` and ``j`` are adjacent.  Everything here is immutable and pure.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence


class Unreachable(enum.Enum):
    """Distance between vertices in different components."""

    INF = "inf"

    def __repr__(self) -> str:
        return "INF"


INF = Unreachable.INF


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError(f"row {i} references a vertex >= n")
            if r >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in _bits(r):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_bit_rows(cls, rows: Sequence[int]) -> "Graph":
        return cls(len(rows), tuple(int(r) for r in rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(self.rows)))

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    return list(_bits(mask))


# ---------------------------------------------------------------------------
# metric quantities


@dataclass(frozen=True)
class DistanceMatrix:
    d: tuple[tuple[int | Unreachable, ...], ...]

    @property
    def n(self) -> int:
        return len(self.d)

    def __getitem__(self, uv):
        u, v = uv
        return self.d[u][v]

    def is_finite(self) -> bool:
        return all(x is not INF for row in self.d for x in row)


@dataclass(frozen=True)
class EccProfile:
    ecc: tuple[int | Unreachable, ...]
    diameter: int | Unreachable
    radius: int | Unreachable
    connected: bool


def distances(g: Graph) -> DistanceMatrix:
    """All-pairs shortest path lengths by bitset BFS."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    out = []
    for s in range(g.n):
        row: list[int | Unreachable] = [INF] * g.n
        row[s] = 0
        seen = frontier = 1 << s
        dist = 0
        while frontier:
            dist += 1
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~seen
            seen |= frontier
            for v in _bits(frontier):
                row[v] = dist
        out.append(tuple(row))
    return DistanceMatrix(tuple(out))


def ecc_profile(dm: DistanceMatrix) -> EccProfile:
    if not dm.is_finite():
        ecc = tuple(INF for _ in range(dm.n))
        return EccProfile(ecc, INF, INF, False)
    ecc = tuple(max(row) for row in dm.d)
    return EccProfile(ecc, max(ecc), min(ecc), True)


def eccentricities(g: Graph) -> EccProfile:
    return ecc_profile(distances(g))


# ---------------------------------------------------------------------------
# subgraphs


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by ``vs``, relabelled ``0..len(vs)-1`` in the given order."""
    vs = list(vs)
    if not vs:
        raise ValueError("vertex subset must be nonempty")
    if len(set(vs)) != len(vs):
        raise ValueError("vertex subset has repeated vertices")
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    rows = []
    for u in vs:
        r = 0
        for j, v in enumerate(vs):
            if g.rows[u] >> v & 1:
                r |= 1 << j
        rows.append(r)
    return Graph(len(vs), tuple(rows))


def find_induced(g: Graph, pattern: Graph) -> list[int] | None:
    """Return host vertices inducing ``pattern`` (image of pattern vertex i at
    position i), or None.

    Backtracking over pattern vertices in descending-degree order; a host
    candidate must have degree at least the pattern degree and agree on
    adjacency with every vertex already placed.
    """
    if pattern.n > g.n:
        raise ValueError("pattern has more vertices than host")
    if pattern.n == 0:
        return []
    pdeg = pattern.degrees()
    hdeg = g.degrees()
    order = sorted(range(pattern.n), key=lambda v: (-pdeg[v], v))
    # prefer placing vertices adjacent to something already placed
    placed_order = [order[0]]
    rest = order[1:]
    while rest:
        placed_mask = 0
        for v in placed_order:
            placed_mask |= 1 << v
        pick = next((v for v in rest if pattern.rows[v] & placed_mask), rest[0])
        rest.remove(pick)
        placed_order.append(pick)

    full = (1 << g.n) - 1
    image = [-1] * pattern.n

    def extend(k: int, used: int) -> bool:
        if k == len(placed_order):
            return True
        pv = placed_order[k]
        cand = full & ~used
        for prev in placed_order[:k]:
            hv = image[prev]
            if pattern.rows[pv] >> prev & 1:
                cand &= g.rows[hv]
            else:
                cand &= ~g.rows[hv]
        for hv in _bits(cand):
            if hdeg[hv] < pdeg[pv]:
                continue
            image[pv] = hv
            if extend(k + 1, used | 1 << hv):
                return True
        image[pv] = -1
        return False

    return list(image) if extend(0, 0) else None


def contains_induced(g: Graph, pattern: Graph) -> bool:
    return find_induced(g, pattern) is not None


# ---------------------------------------------------------------------------
# canonical form

CANON_MAX_N = 10


def _refine(g: Graph) -> list[int]:
    """Stable colour refinement starting from degrees; colours are canonical
    (they depend only on the isomorphism class of the coloured graph)."""
    colors = list(g.degrees())
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.rows[v]))))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_key(g: Graph) -> bytes:
    """Isomorphism-invariant key: the lexicographically largest upper-triangle
    adjacency string over all labelings compatible with the refined cells."""
    if g.n > CANON_MAX_N:
        raise ValueError(f"canonical_key supports n <= {CANON_MAX_N}, got {g.n}")
    colors = _refine(g)
    cells = [[v for v in range(g.n) if colors[v] == c] for c in sorted(set(colors))]
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for p in perms for v in p]
        bits_ = 0
        for i in range(g.n):
            row = g.rows[order[i]]
            for j in range(i + 1, g.n):
                bits_ = bits_ << 1 | (row >> order[j] & 1)
        if best is None or bits_ > best:
            best = bits_
    nbytes = (g.n * (g.n - 1) // 2 + 7) // 8
    cell_sizes = bytes(len(c) for c in cells)
    return bytes([g.n]) + cell_sizes + b"|" + (best or 0).to_bytes(nbytes, "big")


# ---------------------------------------------------------------------------
# named constructors


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre as vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    rows = list(a.rows) + [r << a.n for r in b.rows]
    return Graph(a.n + b.n, tuple(rows))


def join(a: Graph, b: Graph) -> Graph:
    amask = (1 << a.n) - 1
    bmask = ((1 << b.n) - 1) << a.n
    rows = [r | bmask for r in a.rows] + [(r << a.n) | amask for r in b.rows]
    return Graph(a.n + b.n, tuple(rows))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    g = empty(sizes[0])
    for s in sizes[1:]:
        g = join(g, empty(s))
    return g


def clique_components(g: Graph) -> list[int] | None:
    """Component masks if every component of ``g`` is a clique, else None."""
    comps = g.components()
    for c in comps:
        for v in _bits(c):
            if (g.rows[v] | 1 << v) != c:
                return None
    return comps


def is_complete_multipartite(g: Graph) -> bool:
    """True iff the complement is a disjoint union of cliques."""
    return clique_components(g.complement()) is not None
