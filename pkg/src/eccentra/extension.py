"""Mixed extensions, with the star family S(t0, -p, t1, ..., tq) in normal form."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bits, clique_components, induced_subgraph


def mixed_extension(base: Graph, ty: Sequence[int]) -> Graph:
    """Replace base vertex i by a clique (ty[i] > 0) or coclique (ty[i] < 0)
    of size |ty[i]|; blocks i and j are fully joined iff i ~ j in ``base``."""
    if len(ty) != base.n:
        raise ValueError(f"type has length {len(ty)}, base has {base.n} vertices")
    if any(t == 0 for t in ty):
        raise ValueError("extension type entries must be nonzero")
    offsets = [0]
    for t in ty:
        offsets.append(offsets[-1] + abs(t))
    blocks = [((1 << abs(t)) - 1) << offsets[i] for i, t in enumerate(ty)]
    rows = []
    for i, t in enumerate(ty):
        cross = 0
        for j in bits(base.rows[i]):
            cross |= blocks[j]
        for v in range(offsets[i], offsets[i + 1]):
            inner = blocks[i] & ~(1 << v) if t > 0 else 0
            rows.append(cross | inner)
    return Graph(offsets[-1], tuple(rows))


@dataclass(frozen=True, order=True)
class StarParams:
    """S(t0, -p, k1*t1, ..., kh*th): a centre clique of size t0, p pendant
    singletons and k_i cliques of size t_i (t1 > ... > th >= 2)."""

    t0: int
    p: int = 0
    parts: tuple[tuple[int, int], ...] = ()  # (size, multiplicity), sizes decreasing

    def __post_init__(self):
        if self.t0 < 1:
            raise ValueError("centre clique size t0 must be >= 1")
        if self.p < 0:
            raise ValueError("leaf count p must be >= 0")
        prev = None
        for size, k in self.parts:
            if size < 2 or k < 1:
                raise ValueError(f"bad part {size}^{k}: sizes must be >= 2, counts >= 1")
            if prev is not None and size >= prev:
                raise ValueError("part sizes must be strictly decreasing")
            prev = size

    @property
    def q(self) -> int:
        return sum(k for _, k in self.parts)

    @property
    def h(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return self.t0 + self.p + sum(t * k for t, k in self.parts)

    @property
    def sizes(self) -> list[int]:
        """Clique part sizes as a flat non-increasing list."""
        return [t for t, k in self.parts for _ in range(k)]

    @property
    def is_complete(self) -> bool:
        return self.p + self.q <= 1

    def __str__(self) -> str:
        items = [str(self.t0)]
        if self.p:
            items.append(f"-{self.p}")
        for t, k in self.parts:
            items.append(f"{t}^{k}" if k > 1 else str(t))
        return "S(" + ",".join(items) + ")"


def normalize(raw: Sequence[int]) -> StarParams:
    """Normal form of a raw star type (t0, t1, ..., tk).

    Size-1 cliques and every coclique entry are pooled into the leaf count;
    a complete graph K_n (n >= 2) is always reported as S(n-1, -1).
    """
    raw = list(raw)
    if not raw:
        raise ValueError("empty star type")
    if any(t == 0 for t in raw):
        raise ValueError("star type entries must be nonzero")
    t0 = raw[0]
    if t0 < 0:
        raise ValueError("centre entry must be a clique (positive)")
    p = 0
    counts: Counter[int] = Counter()
    for t in raw[1:]:
        if t < 0:
            p += -t
        elif t == 1:
            p += 1
        else:
            counts[t] += 1
    return _canonical(t0, p, counts)


def _canonical(t0: int, p: int, counts: Counter) -> StarParams:
    parts = tuple(sorted(((t, k) for t, k in counts.items() if k), reverse=True))
    sp = StarParams(t0, p, parts)
    if sp.is_complete and sp.n >= 2:
        return StarParams(sp.n - 1, 1, ())
    return sp


def star_extension(sp: StarParams) -> Graph:
    """Centre vertices first, then the p leaves, then the parts (largest first)."""
    ty = [sp.t0] + [1] * sp.p + sp.sizes
    return mixed_extension(_star(len(ty) - 1), ty)


def _star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def recognize_star_extension(g: Graph) -> StarParams | None:
    if not g.is_connected():
        raise ValueError("recognition needs a connected graph")
    full = (1 << g.n) - 1
    universal = [v for v in range(g.n) if (g.rows[v] | 1 << v) == full]
    if len(universal) == g.n:
        return StarParams(g.n - 1, 1) if g.n >= 2 else StarParams(1)
    if not universal:
        return None
    rest = [v for v in range(g.n) if v not in universal]
    comps = clique_components(induced_subgraph(g, rest))
    if comps is None:
        return None
    sizes = Counter(c.bit_count() for c in comps)
    p = sizes.pop(1, 0)
    return _canonical(len(universal), p, sizes)


def clique_number(sp: StarParams) -> int:
    largest = sp.parts[0][0] if sp.parts else (1 if sp.p else 0)
    return sp.t0 + largest


def param_contains(host: StarParams, pattern: StarParams) -> bool:
    """Whether star_extension(pattern) is an induced subgraph of star_extension(host).

    A pattern with two or more non-centre components can only embed with its
    centre inside the host centre and its components in distinct host
    components, so containment reduces to capacity matching.
    """
    if pattern.is_complete:
        return clique_number(host) >= pattern.n
    if host.is_complete or pattern.t0 > host.t0:
        return False
    host_sizes = host.sizes
    pat_sizes = pattern.sizes
    if len(pat_sizes) > len(host_sizes):
        return False
    if any(h < s for h, s in zip(host_sizes, pat_sizes)):
        return False
    spare = host.p + len(host_sizes) - len(pat_sizes)
    return spare >= pattern.p


# ---------------------------------------------------------------------------
# text form

_LITERAL = re.compile(r"^\s*S\s*\((.*)\)\s*$")
_ITEM = re.compile(r"^\s*(-?\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_star_params(text: str) -> StarParams:
    """Parse ``S(t0,-p,t1^k1,...)`` or the flat form ``S(a,-b,c,d,...)``."""
    m = _LITERAL.match(text)
    if not m:
        raise ValueError(f"not a star literal: {text!r}")
    raw: list[int] = []
    for item in m.group(1).split(","):
        im = _ITEM.match(item)
        if not im:
            raise ValueError(f"bad entry {item!r} in {text!r}")
        value = int(im.group(1))
        reps = int(im.group(2)) if im.group(2) is not None else 1
        if value == 0:
            raise ValueError(f"zero size in {text!r}")
        if reps < 1:
            raise ValueError(f"exponent must be >= 1 in {text!r}")
        if not raw and reps != 1:
            raise ValueError("the centre entry cannot carry an exponent")
        raw.extend([value] * reps)
    return normalize(raw)


def iter_star_params(
    t0_max: int, p_max: int, parts_total_max: int, n_max: int | None = None,
    t0_min: int = 1, max_part: int | None = None, q_max: int | None = None,
) -> Iterable[StarParams]:
    """All normal-form StarParams inside a box, each listed once.

    Complete graphs are included only via their canonical S(n-1, -1) form.
    """
    seen = set()
    for t0 in range(t0_min, t0_max + 1):
        for p in range(p_max + 1):
            for total in range(parts_total_max + 1):
                for sizes in _partitions(total, max_part or total):
                    if q_max is not None and len(sizes) > q_max:
                        continue
                    sp = _canonical(t0, p, Counter(sizes))
                    if sp.n < 2 or (n_max is not None and sp.n > n_max):
                        continue
                    if sp.t0 > t0_max or sp in seen:
                        continue
                    seen.add(sp)
                    yield sp


def _partitions(total: int, largest: int) -> list[list[int]]:
    """Partitions of ``total`` into parts in [2, largest], non-increasing."""
    if total == 0:
        return [[]]
    out = []
    for first in range(min(total, largest), 1, -1):
        for rest in _partitions(total - first, first):
            out.append([first] + rest)
    return out
