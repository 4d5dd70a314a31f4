"""HL-index R = max(|xi_H|, |xi_L|) with H = floor((n+1)/2), L = ceil((n+1)/2).

The closed form locates position L inside the block layout of the tabled
star-extension spectrum and reads off the regime, so case selection is a
lookup and can never fire twice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .characterize import theorem1_predicate
from .closedform import Block, table_layout, zero_table_case
from .extension import StarParams, star_extension
from .spectral import Spectrum, anti_adjacency, eigenvalues

POINT_TOL = 1e-8


def median_indices(n: int) -> tuple[int, int]:
    return (n + 1) // 2, (n + 2) // 2


@dataclass
class HLResult:
    n: int
    H: int
    L: int
    xi_H: float | None = None
    xi_L: float | None = None
    R: float | None = None
    regime: str | None = None
    predicted: float | None = None
    interval: tuple[float, float] | None = None
    agree: bool | None = None
    params: str | None = None
    notes: list[str] = field(default_factory=list)
    spectrum: list[float] | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n, "H": self.H, "L": self.L,
            "xi_H": self.xi_H, "xi_L": self.xi_L, "R": self.R,
            "regime": self.regime, "predicted": self.predicted,
            "interval": list(self.interval) if self.interval else None,
            "agree": self.agree, "params": self.params, "notes": list(self.notes),
        }
        if self.spectrum is not None:
            out["spectrum"] = list(self.spectrum)
        return out


def _exact_or_float(spec: Spectrum, i: int) -> float:
    if spec.annotations and len(spec.annotations) == spec.n:
        ann = spec.annotations[i - 1]
        if ann.startswith("="):
            return float(int(ann[1:]))
    return spec[i]


def hl_numeric(spec: Spectrum, n: int) -> HLResult:
    if spec.n != n or n < 1:
        raise ValueError(f"spectrum has {spec.n} values, expected n = {n}")
    h, l = median_indices(n)
    xh, xl = _exact_or_float(spec, h), _exact_or_float(spec, l)
    return HLResult(n, h, l, xh, xl, max(abs(xh), abs(xl)))


def locate(layout: list[Block], pos: int) -> tuple[int, int]:
    """(block index, 1-based offset inside the block) of spectrum position ``pos``."""
    seen = 0
    for bi, b in enumerate(layout):
        if pos <= seen + b.mult:
            return bi, pos - seen
        seen += b.mult
    raise IndexError(pos)


def hl_closed_form(sp: StarParams) -> HLResult:
    if not theorem1_predicate(sp):
        raise ValueError(f"{sp} is outside the one-positive-eigenvalue family")
    n = sp.n
    h, l = median_indices(n)
    res = HLResult(n, h, l, params=str(sp))
    if sp.is_complete:
        res.regime, res.predicted = "1.3(p+q<=1)", 1.0
        return res
    layout = table_layout(sp)
    bi, offset = locate(layout, l)
    b = layout[bi]
    if b.label == "0":
        main = n - sp.t0 - sp.p - sp.q
        res.regime = "1.3(ii)" if zero_table_case(sp) and offset > main else "1.3(i)"
        res.predicted = 0.0
    elif b.is_slot:
        res.regime = {"xi_(-1,0)": "1.3(ii)", "xi_(-2t_h,-2)": "1.3(v)(a)"}.get(b.label, "1.3(v)(c)")
        lo, hi = abs(b.hi), abs(b.lo)
        res.interval = (float(lo), float(hi))
        if res.regime in ("1.3(v)(a)", "1.3(v)(c)"):
            res.notes.append("interval reported for |xi_L| (signs normalised)")
    else:
        res.regime = {"-1": "1.3(iii)", "-2": "1.3(iv)", "-2t_h": "1.3(v)(b)"}.get(b.label, "1.3(v)(d)")
        res.predicted = float(abs(b.value))
    return res


def hl_agreement(sp: StarParams, solver: str = "lapack") -> HLResult:
    """Closed-form prediction checked against the numeric median eigenvalues."""
    res = hl_closed_form(sp)
    spec = eigenvalues(anti_adjacency(star_extension(sp)), solver=solver)
    num = hl_numeric(spec, sp.n)
    res.xi_H, res.xi_L, res.R = num.xi_H, num.xi_L, num.R
    if res.predicted is not None:
        res.agree = abs(num.R - res.predicted) <= POINT_TOL
    else:
        lo, hi = res.interval
        res.agree = lo < num.R < hi
    if not res.agree:
        res.spectrum = list(spec.values)
        res.notes.append(f"closed form predicts {res.predicted if res.predicted is not None else res.interval}, "
                         f"numeric R = {num.R:.12g}")
    return res


def is_zero_median_subcase(sp: StarParams) -> bool:
    """The t0 = 1, q = 0 clause of the p+q = ceil((n-2t0+2)/2) regime."""
    if sp.is_complete or sp.t0 != 1 or sp.q != 0:
        return False
    return sp.p + sp.q == -(-(sp.n - 2 * sp.t0 + 2) // 2)
