"""Classification predicates: one positive anti-adjacency eigenvalue, the
{-2, 0} exception class, least eigenvalue -2, and the adjacency-side
complete-multipartite baseline."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from .extension import StarParams, param_contains, parse_star_params, recognize_star_extension
from .graph import (
    Graph, clique_components, complete, contains_induced, cycle, disjoint_union,
    eccentricities, induced_subgraph, is_complete_multipartite, path,
)
from .poly import ExactPoly, count_roots, positive_root_count
from .spectral import (
    EXACT_MAX_N, TAU_GROUP, SymMatrix, adjacency, anti_adjacency, char_poly_exact, eigenvalues,
)


class Undecidable(RuntimeError):
    """Float screen inside the guard band and the exact path is unavailable."""


@dataclass
class ClassReport:
    claim: str
    n: int
    spectral_verdict: bool
    structural_verdict: bool
    agree: bool
    spectral: dict = field(default_factory=dict)
    structural: str | None = None
    witnesses: list[str] = field(default_factory=list)
    graph_id: str | None = None

    def to_json(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------------------
# exact sign questions


def _char_poly(m: SymMatrix) -> ExactPoly | None:
    return char_poly_exact(m) if m.n <= EXACT_MAX_N else None


def count_positive(m: SymMatrix, guard: float = TAU_GROUP) -> int:
    """Eigenvalues > 0, with multiplicity.  Exact (Sturm) for n <= 16."""
    cp = _char_poly(m)
    if cp is not None:
        return positive_root_count(cp, multiplicity=True)
    vals = eigenvalues(m).values
    if any(abs(v) <= guard for v in vals):
        raise Undecidable("eigenvalue within the guard band and n too large for exact counting")
    return sum(v > 0 for v in vals)


def _one_positive(m: SymMatrix, guard: float = TAU_GROUP) -> tuple[bool, int | None]:
    """(exactly one positive eigenvalue, exact positive count or None).

    The Perron root of a nonzero nonnegative matrix is positive, so beyond
    the exact range only the sign of xi_2 is needed; a xi_2 inside the guard
    band cannot be decided in floating point.
    """
    cp = _char_poly(m)
    if cp is not None:
        npos = positive_root_count(cp, multiplicity=True)
        return npos == 1, npos
    xi2 = eigenvalues(m).values[1]
    if abs(xi2) <= guard:
        raise Undecidable(f"xi_2 = {xi2:.3e} is inside the guard band and n > {EXACT_MAX_N}")
    return xi2 < 0, None


def one_positive_spectral(g: Graph) -> bool:
    if g.n < 2:
        raise ValueError("need at least two vertices")
    return _one_positive(anti_adjacency(g))[0]


def exception_count(cp: ExactPoly) -> tuple[int, int, int]:
    """(eigenvalues outside {-2, 0}, multiplicity of 0, multiplicity of -2)."""
    rest, m0 = cp.deflate(0)
    rest, m2 = rest.deflate(-2)
    return rest.degree, m0, m2


# ---------------------------------------------------------------------------
# one positive eigenvalue


def theorem1_predicate(sp: StarParams) -> bool:
    return theorem1_conditions(sp.t0, sp.p, sp.q)


def theorem1_conditions(t0: int, p: int, q: int) -> bool:
    """Conditions (i)-(v) on the centre size and the number of non-centre parts."""
    s = p + q
    if t0 == 1:
        return s >= 1
    if t0 == 2:
        return True
    if t0 == 3:
        return s <= 4
    if t0 == 4:
        return s <= 3
    return s <= 2


def condition_label(sp: StarParams) -> str:
    return {1: "1.1(i)", 2: "1.1(ii)", 3: "1.1(iii)", 4: "1.1(iv)"}.get(sp.t0, "1.1(v)")


@dataclass(frozen=True)
class Fixture:
    label: str
    params: StarParams
    literal: str
    xi2_expr: str | None
    xi2_closed: tuple[int, int, int, int] | None
    xi2_printed: str | None

    @property
    def closed_value(self) -> float | None:
        if self.xi2_closed is None:
            return None
        a, b, c, d = self.xi2_closed
        return (a + b * math.sqrt(c)) / d

    @property
    def printed_lower(self) -> float | None:
        return float(self.xi2_printed.rstrip("+")) if self.xi2_printed else None


@lru_cache(maxsize=1)
def table1_fixtures() -> tuple[Fixture, ...]:
    raw = json.loads(resources.files("eccentra.data").joinpath("table1.json").read_text())
    out = []
    for row in raw["fixtures"]:
        closed = row.get("xi2_closed")
        out.append(Fixture(
            row["label"], parse_star_params(row["params"]), row["params"],
            row.get("xi2_expr"), tuple(closed) if closed else None, row.get("xi2_printed"),
        ))
    return tuple(out)


def forbidden_report(sp: StarParams) -> list[str]:
    return [f.label for f in table1_fixtures() if param_contains(sp, f.params)]


SMALL_OBSTRUCTIONS = (
    ("P4", path(4)),
    ("C4", cycle(4)),
    ("P3+K1", disjoint_union(path(3), complete(1))),
)


def theorem1_check(g: Graph, graph_id: str | None = None) -> ClassReport:
    if not g.is_connected():
        raise ValueError("graph must be connected")
    spectral, npos = _one_positive(anti_adjacency(g))
    sp = recognize_star_extension(g)
    witnesses: list[str] = []
    if sp is None:
        structural = False
        prof = eccentricities(g)
        if prof.diameter >= 3:
            witnesses.append(f"diameter {prof.diameter}")
        witnesses.extend(name for name, pat in SMALL_OBSTRUCTIONS
                         if pat.n <= g.n and contains_induced(g, pat))
    else:
        structural = theorem1_predicate(sp)
        if not structural:
            witnesses.append(f"violates {condition_label(sp)}")
            witnesses.extend(forbidden_report(sp))
    return ClassReport(
        claim="theorem1", n=g.n, spectral_verdict=spectral, structural_verdict=structural,
        agree=spectral == structural, spectral={"positive": npos},
        structural=str(sp) if sp else None, witnesses=witnesses, graph_id=graph_id,
    )


def star_report(sp: StarParams) -> ClassReport:
    """Theorem-1 report for a star extension given by parameters.

    Exact for every n: the trivial factors of the characteristic polynomial
    have non-positive roots, so the positive count comes from the core alone.
    """
    from .closedform import star_char_poly

    npos = positive_root_count(star_char_poly(sp).core) if not sp.is_complete else 1
    structural = theorem1_predicate(sp)
    witnesses = [] if structural else [f"violates {condition_label(sp)}", *forbidden_report(sp)]
    return ClassReport(
        claim="theorem1", n=sp.n, spectral_verdict=npos == 1, structural_verdict=structural,
        agree=(npos == 1) == structural, spectral={"positive": npos}, structural=str(sp),
        witnesses=witnesses, graph_id=str(sp),
    )


# ---------------------------------------------------------------------------
# all but two eigenvalues in {-2, 0}


def complete_bipartite_sizes(g: Graph) -> tuple[int, int] | None:
    """(a, b) with a >= b if g is K_{a,b}, else None."""
    comps = clique_components(g.complement())
    if comps is None or len(comps) != 2:
        return None
    a, b = sorted((c.bit_count() for c in comps), reverse=True)
    return a, b


def theorem2_check(g: Graph, graph_id: str | None = None) -> ClassReport:
    if not g.is_connected() or g.n < 2:
        raise ValueError("graph must be connected with n >= 2")
    m = anti_adjacency(g)
    cp = _char_poly(m)
    if cp is not None:
        outside, m0, m2 = exception_count(cp)
    else:
        vals = eigenvalues(m).values
        m0 = sum(abs(v) <= TAU_GROUP for v in vals)
        m2 = sum(abs(v + 2) <= TAU_GROUP for v in vals)
        outside = g.n - m0 - m2
    spectral = outside <= 2
    kab = complete_bipartite_sizes(g)
    structural = kab is not None
    witnesses = []
    if outside == 1:
        witnesses.append("exactly one eigenvalue outside {-2,0}")
    return ClassReport(
        claim="theorem2", n=g.n, spectral_verdict=spectral, structural_verdict=structural,
        agree=spectral == structural and outside != 1,
        spectral={"outside": outside, "mult_0": m0, "mult_-2": m2},
        structural=f"K_{{{kab[0]},{kab[1]}}}" if kab else None,
        witnesses=witnesses, graph_id=graph_id,
    )


# ---------------------------------------------------------------------------
# least eigenvalue -2


@dataclass
class LeastMinus2:
    spectral: bool
    structural: bool
    form: str | None
    n0: int
    parts: tuple[int, ...]
    single_coclique_join: bool = False  # K_n0 v (m K1), m >= 2: outside both stated forms

    @property
    def agree(self) -> bool:
        return self.spectral == self.structural

    def to_json(self) -> dict:
        return {**asdict(self), "parts": list(self.parts), "agree": self.agree}


def multipartite_parts(g: Graph) -> tuple[int, ...] | None:
    comps = clique_components(g.complement())
    if comps is None:
        return None
    return tuple(sorted((c.bit_count() for c in comps), reverse=True))


def _join_l_bound_ok(n0: int, l: int) -> bool:
    if n0 == 1:
        return 2 <= l <= 4
    if n0 == 2:
        return 2 <= l <= 3
    return l == 2


def least_minus2_predicate(g: Graph) -> LeastMinus2:
    if not g.is_connected():
        raise ValueError("graph must be connected")
    m = anti_adjacency(g)
    cp = _char_poly(m)
    if cp is not None:
        below = count_roots(cp, -math.inf, -2) - (1 if cp(-2) == 0 else 0)
        spectral = cp(-2) == 0 and below == 0
    else:
        spectral = abs(eigenvalues(m).values[-1] + 2) <= TAU_GROUP

    full = (1 << g.n) - 1
    universal = [v for v in range(g.n) if (g.rows[v] | 1 << v) == full]
    rest = [v for v in range(g.n) if v not in universal]
    form, parts = None, ()
    n0 = len(universal)
    single = False
    if rest:
        mp = multipartite_parts(induced_subgraph(g, rest))
        single = n0 >= 1 and mp is not None and len(mp) == 1 and mp[0] >= 2
        if mp is not None and len(mp) >= 2 and min(mp) >= 2:
            parts = mp
            if n0 == 0:
                form = "i"
            elif _join_l_bound_ok(n0, len(mp)):
                form = "ii"
    return LeastMinus2(spectral, form is not None, form, n0, parts, single)


# ---------------------------------------------------------------------------
# adjacency baseline


def smith_check(g: Graph, graph_id: str | None = None) -> ClassReport:
    if not g.is_connected():
        raise ValueError("graph must be connected")
    spectral, npos = _one_positive(adjacency(g))
    structural = is_complete_multipartite(g)
    return ClassReport(
        claim="smith", n=g.n, spectral_verdict=spectral, structural_verdict=structural,
        agree=spectral == structural, spectral={"positive": npos},
        structural="complete multipartite" if structural else None, graph_id=graph_id,
    )


def second_eigenvalue(sp_or_graph) -> float:
    """xi_2 of the anti-adjacency matrix (numeric)."""
    from .extension import star_extension

    g = star_extension(sp_or_graph) if isinstance(sp_or_graph, StarParams) else sp_or_graph
    return float(np.sort(np.linalg.eigvalsh(anti_adjacency(g).to_numpy()))[-2])
