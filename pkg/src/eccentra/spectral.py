"""Anti-adjacency / adjacency matrices, their spectra and exact invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import INF, Graph, distances, ecc_profile, induced_subgraph
from .poly import ExactPoly

TAU_EIG = 1e-12
TAU_GROUP = 1e-8
EXACT_MAX_N = 16


@dataclass(frozen=True)
class SymMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, r in enumerate(self.rows):
            if len(r) != n:
                raise ValueError("matrix must be square")
            for j in range(i):
                if r[j] != self.rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")

    @classmethod
    def from_array(cls, a) -> "SymMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in a))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=float).reshape(self.n, self.n)

    def principal(self, vs: Sequence[int]) -> "SymMatrix":
        return SymMatrix(tuple(tuple(self.rows[u][v] for v in vs) for u in vs))

    def norm(self) -> float:
        """Frobenius norm."""
        return float(sum(x * x for row in self.rows for x in row)) ** 0.5


def anti_adjacency(g: Graph) -> SymMatrix:
    """Keep d(u,v) exactly where it equals min(ecc(u), ecc(v)); zero elsewhere."""
    dm = distances(g)
    prof = ecc_profile(dm)
    if not prof.connected:
        raise ValueError("anti-adjacency matrix needs a connected graph")
    ecc = prof.ecc
    rows = []
    for u in range(g.n):
        row = []
        for v in range(g.n):
            d = dm.d[u][v]
            row.append(d if u != v and d == min(ecc[u], ecc[v]) else 0)
        rows.append(tuple(row))
    return SymMatrix(tuple(rows))


def adjacency(g: Graph) -> SymMatrix:
    return SymMatrix(tuple(tuple(r >> v & 1 for v in range(g.n)) for r in g.rows))


# ---------------------------------------------------------------------------
# numeric spectrum


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]
    annotations: tuple[str, ...] = ()
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        """1-based access, xi_1 >= xi_2 >= ... >= xi_n."""
        if not 1 <= i <= len(self.values):
            raise IndexError(i)
        return self.values[i - 1]

    def to_json(self) -> dict:
        out = {
            "values": [float(v) for v in self.values],
            "groups": [[float(v), m] for v, m in self.groups],
            "annotations": list(self.annotations),
        }
        out.update(self.extra)
        return out


def group_values(values: Sequence[float], tol: float = TAU_GROUP) -> tuple[tuple[float, int], ...]:
    """Chain descending values closer than ``tol`` into (mean, multiplicity)."""
    groups: list[list[float]] = []
    for v in values:
        if groups and abs(groups[-1][-1] - v) <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple((sum(g) / len(g), len(g)) for g in groups)


def make_spectrum(values, annotations=(), tol: float = TAU_GROUP, **extra) -> Spectrum:
    vals = tuple(sorted((float(v) for v in values), reverse=True))
    return Spectrum(vals, group_values(vals, tol), tuple(annotations), dict(extra))


def jacobi_eigenvalues(a: np.ndarray, tol: float = TAU_EIG, max_sweeps: int = 100) -> np.ndarray:
    """Cyclic Jacobi; stops once the off-diagonal norm is below tol * ||a||_F."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    scale = np.linalg.norm(a) or 1.0
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    return np.sort(np.diag(a))[::-1]


def eigenvalues(m: SymMatrix, *, solver: str = "lapack", tol: float = TAU_EIG,
                group_tol: float = TAU_GROUP) -> Spectrum:
    """All eigenvalues, descending, grouped under ``group_tol``.

    ``solver="lapack"`` uses the symmetric divide-and-conquer driver;
    ``solver="jacobi"`` runs the cyclic Jacobi method to relative off-diagonal
    tolerance ``tol``.  Both are deterministic.
    """
    if m.n == 0:
        return Spectrum((), ())
    a = m.to_numpy()
    if solver == "lapack":
        vals = np.linalg.eigvalsh(a)[::-1]
    elif solver == "jacobi":
        vals = jacobi_eigenvalues(a, tol)
    else:
        raise ValueError(f"unknown solver {solver!r}")
    return make_spectrum(vals, tol=group_tol)


# ---------------------------------------------------------------------------
# exact invariants


def char_poly_exact(m: SymMatrix) -> ExactPoly:
    """det(x I - m) by Faddeev-LeVerrier over Python integers."""
    n = m.n
    if n > EXACT_MAX_N:
        raise ValueError(f"exact characteristic polynomial limited to n <= {EXACT_MAX_N}")
    a = [list(r) for r in m.rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = _matmul(a, mk)
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            prod[i][i] += c_prev
        mk = prod
        am = _matmul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral trace quotient")  # cannot happen for integer input
        coeffs[n - k] = -tr // k
    return ExactPoly(coeffs)


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def exact_rank(m: SymMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination; integers throughout."""
    a = [list(r) for r in m.rows]
    n = len(a)
    ncols = n
    rank = 0
    prev = 1
    col = 0
    while rank < n and col < ncols:
        pivot = next((r for r in range(rank, n) if a[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        piv = a[rank][col]
        for r in range(rank + 1, n):
            for c in range(col + 1, ncols):
                num = a[r][c] * piv - a[rank][c] * a[r][col]
                a[r][c] = num // prev
            a[r][col] = 0
        prev = piv
        rank += 1
        col += 1
    return rank


def exact_nullity(m: SymMatrix) -> int:
    return m.n - exact_rank(m)


class SubmatrixPropertyError(AssertionError):
    """Distances and eccentricities are preserved but the anti-adjacency
    matrix of the subgraph is not the principal submatrix."""


def submatrix_conditions(g: Graph, vs: Sequence[int]) -> bool:
    """True iff the subgraph induced by ``vs`` keeps every G-eccentricity and
    every pairwise G-distance; when true the principal-submatrix identity is
    checked entrywise."""
    vs = list(vs)
    h = induced_subgraph(g, vs)
    if not h.is_connected():
        raise ValueError("induced subgraph is disconnected")
    dg = distances(g)
    dh = distances(h)
    eg = ecc_profile(dg).ecc
    eh = ecc_profile(dh).ecc
    if any(eh[i] != eg[u] for i, u in enumerate(vs)):
        return False
    for i, u in enumerate(vs):
        for j, v in enumerate(vs):
            if dh.d[i][j] != dg.d[u][v]:
                return False
    if anti_adjacency(h) != anti_adjacency(g).principal(vs):
        raise SubmatrixPropertyError(f"principal-submatrix identity fails for {vs}")
    return True


def interlaces(big: Sequence[float], small: Sequence[float], tol: float = TAU_GROUP) -> bool:
    """Cauchy interlacing: big[n-m+i] <= small[i] <= big[i] (descending, 0-based)."""
    n, m = len(big), len(small)
    return all(
        big[n - m + i] - tol <= small[i] <= big[i] + tol for i in range(m)
    )
