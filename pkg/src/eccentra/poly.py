"""Exact univariate polynomials over Q with Sturm-sequence root counting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction


def _trim(cs: list) -> tuple:
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in cs)


@dataclass(frozen=True)
class ExactPoly:
    """Coefficients in ascending degree; integers where possible."""

    coeffs: tuple[Number, ...]

    def __init__(self, coeffs: Iterable[Number]):
        cs = list(coeffs) or [0]
        object.__setattr__(self, "coeffs", _trim(cs))

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> "ExactPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, a: Number) -> "ExactPoly":
        """lambda + a"""
        return cls([a, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "ExactPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    # basic properties -----------------------------------------------------
    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def lead(self) -> Number:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"ExactPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0 and len(self.coeffs) > 1:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if mono else f"{c}"
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "ExactPoly | Number") -> "ExactPoly":
        o = other.coeffs if isinstance(other, ExactPoly) else (other,)
        m = max(len(self.coeffs), len(o))
        return ExactPoly(
            (self.coeffs[i] if i < len(self.coeffs) else 0) + (o[i] if i < len(o) else 0)
            for i in range(m)
        )

    __radd__ = __add__

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(-c for c in self.coeffs)

    def __sub__(self, other: "ExactPoly | Number") -> "ExactPoly":
        return self + (-other if isinstance(other, ExactPoly) else -other)

    def __rsub__(self, other: Number) -> "ExactPoly":
        return (-self) + other

    def __mul__(self, other: "ExactPoly | Number") -> "ExactPoly":
        if not isinstance(other, ExactPoly):
            return ExactPoly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ExactPoly":
        out = ExactPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "ExactPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = other.degree
        lead = Fraction(other.lead)
        if self.degree < dq:
            return ExactPoly([0]), self
        quot = [Fraction(0)] * (self.degree - dq + 1)
        for i in range(self.degree - dq, -1, -1):
            c = rem[i + dq] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return ExactPoly(quot), ExactPoly(rem[:dq] or [0])

    def __floordiv__(self, other: "ExactPoly") -> "ExactPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ExactPoly") -> "ExactPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "ExactPoly":
        return ExactPoly(i * c for i, c in enumerate(self.coeffs) if i) if self.degree > 0 else ExactPoly([0])

    def monic(self) -> "ExactPoly":
        lead = Fraction(self.lead)
        return ExactPoly(Fraction(c) / lead for c in self.coeffs)

    def primitive(self) -> "ExactPoly":
        """Integer multiple with coprime integer coefficients and positive lead."""
        if self.is_zero():
            return self
        den = math.lcm(*(Fraction(c).denominator for c in self.coeffs))
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = math.gcd(*ints)
        sign = -1 if ints[-1] < 0 else 1
        return ExactPoly(sign * c // g for c in ints)

    def multiplicity(self, root: Number) -> int:
        """Multiplicity of ``root`` as a root (0 if not a root)."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        m = 0
        p = self
        lin = ExactPoly([-root, 1])
        while p.degree > 0:
            q, r = divmod(p, lin)
            if not r.is_zero():
                break
            p, m = q, m + 1
        return m

    def deflate(self, root: Number) -> tuple["ExactPoly", int]:
        """Divide out (x - root) completely; returns (cofactor, multiplicity)."""
        m = self.multiplicity(root)
        return self // (ExactPoly([-root, 1]) ** m), m

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def gcd(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.primitive() if not a.is_zero() else a


def squarefree_decomposition(p: ExactPoly) -> list[tuple[ExactPoly, int]]:
    """Yun's algorithm: p = c * prod f_i^i with f_i squarefree, coprime."""
    if p.degree <= 0:
        return []
    out = []
    a = gcd(p, p.derivative())
    b = p // a
    d = p.derivative() // a - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a.primitive(), i))
        b, c = b // a, d // a
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: ExactPoly) -> ExactPoly:
    if p.degree <= 0:
        return p
    return (p // gcd(p, p.derivative())).primitive()


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(p: ExactPoly) -> list[ExactPoly]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r.primitive() if r.lead > 0 else r.primitive())
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(p: ExactPoly, x) -> int:
    """Sign at x; x = +inf / -inf encoded as math.inf floats."""
    if x == math.inf:
        return _sign(p.lead)
    if x == -math.inf:
        return _sign(p.lead) * (-1 if p.degree % 2 else 1)
    return _sign(p(x))


def _variations(seq: Sequence[ExactPoly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: ExactPoly, lo=-math.inf, hi=math.inf, *, multiplicity: bool = False) -> int:
    """Number of real roots in the half-open interval (lo, hi].

    Distinct roots by default; with ``multiplicity=True`` roots are counted
    with multiplicity via the squarefree decomposition.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if not lo < hi:
        raise ValueError(f"degenerate interval ({lo}, {hi}]")
    if multiplicity:
        return sum(i * count_roots(f, lo, hi) for f, i in squarefree_decomposition(p))
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return 0
    seq = sturm_sequence(sf)
    return _variations(seq, lo) - _variations(seq, hi)


def positive_root_count(p: ExactPoly, *, multiplicity: bool = True) -> int:
    return count_roots(p, 0, math.inf, multiplicity=multiplicity)


def count_sign_changes(p: ExactPoly) -> int:
    """Descartes count of sign changes; equals the number of positive roots
    (with multiplicity) when all roots of ``p`` are real."""
    signs = [_sign(c) for c in p.coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(p: ExactPoly) -> Fraction:
    """Cauchy bound: every root satisfies |x| < bound."""
    lead = abs(Fraction(p.lead))
    return 1 + max((abs(Fraction(c)) / lead for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootInterval:
    """Interval (lo, hi] holding exactly one distinct real root; lo == hi
    means the root is exactly that rational."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def isolate_real_roots(p: ExactPoly, width: Fraction = Fraction(1, 10**10)) -> list[RootInterval]:
    """Certified isolating intervals for all real roots, descending order."""
    out: list[RootInterval] = []
    for f, mult in squarefree_decomposition(p):
        seq = sturm_sequence(f)
        b = root_bound(f)
        out.extend(
            RootInterval(lo, hi, mult) for lo, hi in _isolate(f, seq, -b, b, width)
        )
    out.sort(key=lambda r: r.hi, reverse=True)
    return out


def _isolate(f, seq, lo, hi, width):
    n = _variations(seq, lo) - _variations(seq, hi)
    if n == 0:
        return []
    if n == 1:
        return [_refine(f, seq, lo, hi, width)]
    mid = (lo + hi) / 2
    return _isolate(f, seq, lo, mid, width) + _isolate(f, seq, mid, hi, width)


def _refine(f, seq, lo, hi, width):
    checked_integer = False
    while True:
        if f(hi) == 0:
            return hi, hi
        if not checked_integer and hi - lo < 1:
            # integer roots (the common case for these matrices) come back exact
            checked_integer = True
            k = math.floor(hi)
            if k > lo and f(k) == 0:
                return Fraction(k), Fraction(k)
        if hi - lo <= width:
            return lo, hi
        mid = (lo + hi) / 2
        if _variations(seq, lo) - _variations(seq, mid) == 1:
            hi = mid
        else:
            lo = mid


def refine_in(p: ExactPoly, lo: Fraction, hi: Fraction, width=Fraction(1, 10**10)) -> RootInterval | None:
    """Isolate the single distinct root of ``p`` in (lo, hi]; None unless
    exactly one distinct root lies there."""
    sf = squarefree_part(p)
    seq = sturm_sequence(sf)
    if _variations(seq, lo) - _variations(seq, hi) != 1:
        return None
    a, b = _refine(sf, seq, Fraction(lo), Fraction(hi), width)
    return RootInterval(a, b, 1)


# ---------------------------------------------------------------------------
# symbolic display


def _split_square(d: int) -> tuple[int, int]:
    """d = k^2 * r with r squarefree; returns (k, r)."""
    k, r, f = 1, d, 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            k *= f
        f += 1
    return k, r


def _quadratic_roots(q: ExactPoly) -> list[tuple[float, str]]:
    c, b, a = (Fraction(x) for x in q.primitive().coeffs)
    a, b, c = int(a), int(b), int(c)
    disc = b * b - 4 * a * c
    k, r = _split_square(disc)
    if r == 1:
        return [(float(x), _frac_str(x)) for x in (Fraction(-b + k, 2 * a), Fraction(-b - k, 2 * a))]
    den = 2 * a
    g = math.gcd(math.gcd(b, k), den)
    num, k, den = -b // g, k // g, den // g
    out = []
    for sign in (1, -1):
        rad = "sqrt(%d)" % r if k == 1 else "%d*sqrt(%d)" % (k, r)
        body = (f"{num}" if num else "") + ("+" if sign > 0 and num else "" if sign > 0 else "-") + rad
        text = body if den == 1 else f"({body})/{den}"
        out.append(((num + sign * k * math.sqrt(r)) / den, text))
    return out


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def symbolic_roots(p: ExactPoly, digits: int = 12) -> list[str]:
    """All real roots, descending, with multiplicity: rationals exactly,
    roots of leftover quadratic factors as radicals, anything else as a
    decimal with ``digits`` significant digits."""
    found: list[tuple[float, str]] = []
    for f, mult in squarefree_decomposition(p):
        rest = f
        for r in isolate_real_roots(f):
            if r.exact:
                found.extend([(float(r.lo), _frac_str(r.lo))] * mult)
                rest = rest // ExactPoly([-r.lo, 1])
        if rest.degree == 2:
            for val, text in _quadratic_roots(rest):
                found.extend([(val, text)] * mult)
        elif rest.degree > 0:
            for r in isolate_real_roots(rest, Fraction(1, 10 ** (digits + 2))):
                found.extend([(r.mid, f"{r.mid:.{digits}g}")] * mult)
    found.sort(key=lambda t: t[0], reverse=True)
    return [t for _, t in found]
