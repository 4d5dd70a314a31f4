"""Exhaustive and grid verification of the classification results.

Exhaustive checks run on the vectorised kernel; counterexamples are reduced
to isomorphism classes and re-checked on the per-graph exact path before
they are reported.  Reports carry no wall-clock data in their JSON form, so
identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from . import kernel
from .characterize import (
    forbidden_report, table1_fixtures, theorem1_conditions, theorem1_predicate,
)
from .cli.graph6 import to_graph6
from .closedform import (
    closed_form_spectrum, is_t0_1_q_0_subcase, join_char_poly, join_core, star_char_poly,
)
from .extension import StarParams, _partitions, iter_star_params, recognize_star_extension, star_extension
from .graph import Graph, canonical_key, complete, complete_multipartite, induced_subgraph, join, path
from .poly import isolate_real_roots, positive_root_count
from .spectral import (
    SubmatrixPropertyError, anti_adjacency, char_poly_exact, eigenvalues, exact_nullity,
    interlaces, submatrix_conditions,
)

SCHEMA = "eccentra.report/1"
MAX_WITNESSES = 25
EIG_TOL = 1e-8


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("ECCENTRA_WORKERS", "1") or 1)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    return workers


@dataclass
class VerifyReport:
    claim: str
    scope: dict
    totals: dict = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "schema": SCHEMA, "kind": "verify", "claim": self.claim, "scope": self.scope,
            "totals": self.totals, "verdicts": self.verdicts, "passed": self.passed,
            "counterexamples": self.counterexamples, "stats": self.stats,
        }
        if timing:
            out["duration_s"] = round(self.duration, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, indent=2)

    def text(self, timing: bool = False) -> str:
        lines = [f"verify {self.claim}: {'PASS' if self.passed else 'FAIL'}"]
        lines.append("  scope: " + ", ".join(f"{k}={v}" for k, v in sorted(self.scope.items())))
        if self.totals:
            lines.append("  totals: " + ", ".join(f"{k}={v}" for k, v in sorted(self.totals.items())))
        for name, ok in sorted(self.verdicts.items()):
            lines.append(f"  {name}: {'pass' if ok else 'FAIL'}")
        for cx in self.counterexamples[:10]:
            where = cx.get("graph6") or cx.get("params")
            lines.append(f"  counterexample [{cx['claim']}] {where}: {cx.get('detail', '')}")
        if timing:
            lines.append(f"  duration: {self.duration:.2f}s")
        return "\n".join(lines)


class _Timer:
    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t


# ---------------------------------------------------------------------------
# enumeration


def enumerate_connected(n: int, shard: tuple[int, int] | None = None, dedup: bool = False) -> Iterator[Graph]:
    """Every connected labeled graph on n vertices once, in mask order."""
    if not 2 <= n <= kernel.MAX_N:
        raise ValueError(f"n must be in [2, {kernel.MAX_N}]")
    r = kernel.shard_range(n, shard)
    seen: set[bytes] = set()
    for lo in range(r.start, r.stop, kernel.CHUNK):
        masks = np.arange(lo, min(lo + kernel.CHUNK, r.stop), dtype=np.int64)
        _, conn = kernel.distances_batch(kernel.adjacency_batch(n, masks))
        for m in masks[conn]:
            g = kernel.mask_to_graph(n, int(m))
            if dedup:
                key = canonical_key(g)
                if key in seen:
                    continue
                seen.add(key)
            yield g


def _scan_shard(args):
    n, shard = args
    return kernel.scan(n, shard)


@lru_cache(maxsize=8)
def exhaustive_table(n: int, workers: int = 1) -> dict[str, np.ndarray]:
    """Kernel output for all connected graphs on n vertices (cached per process)."""
    if workers <= 1 or n <= 5:
        tab = kernel.scan(n)
    else:
        count = workers * 4
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_scan_shard, [(n, (i, count)) for i in range(count)]))
        tab = {k: np.concatenate([p[k] for p in parts]) for k in kernel.FIELDS}
    small = {k: (v.astype(np.int64) if k == "mask" else v.astype(np.int8)) for k, v in tab.items()}
    for v in small.values():
        v.setflags(write=False)
    return small


def _apply_triples(fn: Callable[[int, int, int], bool], t0, p, q) -> np.ndarray:
    triples = np.stack([t0, p, q], axis=1).astype(np.int64)
    if len(triples) == 0:
        return np.zeros(0, dtype=bool)
    uniq, inv = np.unique(triples, axis=0, return_inverse=True)
    vals = np.array([bool(fn(*map(int, row))) for row in uniq])
    return vals[inv.reshape(-1)]


def _witnesses(n: int, masks: np.ndarray, describe: Callable[[Graph], dict], claim: str) -> list[dict]:
    """One representative per isomorphism class, lowest mask first."""
    out, seen = [], set()
    for m in masks[:5000]:
        g = kernel.mask_to_graph(n, int(m))
        key = canonical_key(g)
        if key in seen:
            continue
        seen.add(key)
        out.append({"claim": claim, "n": n, "graph6": to_graph6(g), **describe(g)})
        if len(out) >= MAX_WITNESSES:
            break
    return out


def _scope(n_max, n_min):
    return {"n_min": n_min, "n_max": n_max, "labeled": True}


def _star_description(g: Graph) -> dict:
    sp = recognize_star_extension(g)
    d = {"structural": str(sp) if sp else None}
    if sp is not None and not sp.is_complete:
        d["forbidden"] = forbidden_report(sp)
    return d


# ---------------------------------------------------------------------------
# exhaustive claims


def verify_theorem1(n_max: int = 7, *, n_min: int = 2, workers: int | None = None,
                    conditions: Callable[[int, int, int], bool] = theorem1_conditions) -> VerifyReport:
    """One positive eigenvalue <=> star extension satisfying ``conditions``;
    also every member has diameter <= 2 and no induced P4, C4, P3+K1."""
    workers = resolve_workers(workers)
    rep = VerifyReport("theorem1", _scope(n_max, n_min))
    scanned = connected = members = 0
    bad_iff: list[dict] = []
    bad_nec: list[dict] = []
    with _Timer() as tm:
        for n in range(n_min, n_max + 1):
            tab = exhaustive_table(n, workers)
            scanned += 1 << (n * (n - 1) // 2)
            connected += len(tab["mask"])
            spectral = tab["pos_anti"] == 1
            structural = tab["star"].astype(bool) & _apply_triples(conditions, tab["t0"], tab["p"], tab["q"])
            members += int(spectral.sum())
            diff = spectral != structural
            if diff.any():
                def describe(g):
                    npos = positive_root_count(char_poly_exact(anti_adjacency(g)))
                    return {"positive": npos, "spectral_verdict": npos == 1, "structural_verdict": npos != 1,
                            **_star_description(g),
                            "detail": f"{npos} positive eigenvalue(s) but structural verdict is {npos != 1}"}
                bad_iff += _witnesses(n, tab["mask"][diff], describe, "theorem1")
            nec = spectral & ((tab["diameter"] > 2) | tab["obstructed"].astype(bool))
            if nec.any():
                bad_nec += _witnesses(n, tab["mask"][nec], lambda g: {"detail": "member violates necessary conditions"},
                                      "theorem1.necessary")
            rep.stats[f"n={n}"] = {"connected": int(len(tab["mask"])), "members": int(spectral.sum()),
                                   "disagreements": int(diff.sum())}
    rep.totals = {"scanned": scanned, "connected": connected, "members": members}
    rep.verdicts = {"theorem1.iff": not bad_iff, "theorem1.necessary": not bad_nec}
    rep.counterexamples = bad_iff + bad_nec
    rep.duration = tm.elapsed
    return rep


def verify_theorem2(n_max: int = 7, *, n_min: int = 2, workers: int | None = None,
                    structural: Callable[[int], bool] = lambda parts: parts == 2) -> VerifyReport:
    """At most two eigenvalues outside {-2, 0} <=> complete bipartite; never exactly one."""
    workers = resolve_workers(workers)
    rep = VerifyReport("theorem2", _scope(n_max, n_min))
    scanned = connected = members = 0
    bad_iff: list[dict] = []
    bad_one: list[dict] = []
    with _Timer() as tm:
        for n in range(n_min, n_max + 1):
            tab = exhaustive_table(n, workers)
            scanned += 1 << (n * (n - 1) // 2)
            connected += len(tab["mask"])
            outside = tab["outside"]
            spectral = outside <= 2
            parts = tab["mp_parts"].astype(np.int64)
            struct = np.array([structural(int(x)) if x > 0 else False for x in range(parts.max() + 1)])[parts]
            members += int(spectral.sum())
            diff = spectral != struct
            if diff.any():
                def describe(g, n=n):
                    m = kernel.scan_masks(n, np.array([kernel.graph_to_mask(g)], dtype=np.int64))
                    o, k = int(m["outside"][0]), int(m["mp_parts"][0])
                    return {"outside": o, "multipartite_parts": k,
                            "detail": f"{o} eigenvalues outside {{-2,0}}, {k or 'not'} complete multipartite"}
                bad_iff += _witnesses(n, tab["mask"][diff], describe, "theorem2")
            one = outside == 1
            if one.any():
                bad_one += _witnesses(n, tab["mask"][one], lambda g: {"detail": "exactly one exception"},
                                      "theorem2.part_i")
            rep.stats[f"n={n}"] = {"connected": int(len(tab["mask"])), "members": int(spectral.sum()),
                                   "disagreements": int(diff.sum()), "exactly_one": int(one.sum())}
    rep.totals = {"scanned": scanned, "connected": connected, "members": members}
    rep.verdicts = {"theorem2.iff": not bad_iff, "theorem2.part_i": not bad_one}
    rep.counterexamples = bad_iff + bad_one
    rep.duration = tm.elapsed
    return rep


def verify_smith(n_max: int = 7, *, n_min: int = 2, workers: int | None = None,
                 structural: Callable[[int], bool] = lambda parts: parts >= 1) -> VerifyReport:
    """One positive adjacency eigenvalue <=> complete multipartite."""
    workers = resolve_workers(workers)
    rep = VerifyReport("smith", _scope(n_max, n_min))
    scanned = connected = members = 0
    bad: list[dict] = []
    with _Timer() as tm:
        for n in range(n_min, n_max + 1):
            tab = exhaustive_table(n, workers)
            scanned += 1 << (n * (n - 1) // 2)
            connected += len(tab["mask"])
            spectral = tab["pos_adj"] == 1
            parts = tab["mp_parts"].astype(np.int64)
            struct = np.array([structural(int(x)) if x > 0 else False for x in range(parts.max() + 1)])[parts]
            members += int(spectral.sum())
            diff = spectral != struct
            if diff.any():
                bad += _witnesses(n, tab["mask"][diff], lambda g: {"detail": "adjacency verdict differs"}, "smith")
            rep.stats[f"n={n}"] = {"connected": int(len(tab["mask"])), "members": int(spectral.sum()),
                                   "disagreements": int(diff.sum())}
    rep.totals = {"scanned": scanned, "connected": connected, "members": members}
    rep.verdicts = {"smith.iff": not bad}
    rep.counterexamples = bad
    rep.duration = tm.elapsed
    return rep


# ---------------------------------------------------------------------------
# parameter grids


def star_one_positive(sp: StarParams) -> bool:
    """Exact, any n: only the core factor can have positive roots."""
    return positive_root_count(star_char_poly(sp).core) == 1


def verify_theorem1_grid(t0_max: int = 6, p_max: int = 5, q_max: int = 5, part_max: int = 4,
                         predicate: Callable[[StarParams], bool] = theorem1_predicate) -> VerifyReport:
    """predicate <=> no F1-F12 inside <=> exactly one positive eigenvalue, over a star grid."""
    rep = VerifyReport("theorem1-grid", {"t0_max": t0_max, "p_max": p_max, "q_max": q_max,
                                          "part_max": part_max})
    bad: list[dict] = []
    count = 0
    with _Timer() as tm:
        for sp in iter_star_params(t0_max, p_max, q_max * part_max, max_part=part_max, q_max=q_max):
            if sp.is_complete:
                continue
            count += 1
            pred = bool(predicate(sp))
            forb = forbidden_report(sp)
            spec = star_one_positive(sp)
            if not (pred == (not forb) == spec):
                bad.append({"claim": "theorem1-grid", "params": str(sp), "predicate": pred,
                            "forbidden": forb, "one_positive": spec,
                            "detail": f"predicate={pred}, forbidden={forb}, one_positive={spec}"})
    rep.totals = {"instances": count}
    rep.verdicts = {"theorem1.grid": not bad}
    rep.counterexamples = bad
    rep.duration = tm.elapsed
    return rep


def _numeric_matches(values, numeric) -> bool:
    return len(values) == len(numeric) and all(abs(a - b) <= EIG_TOL for a, b in zip(values, numeric))


def join_grid(n0_max: int = 3, parts_total_max: int = 8, n_max: int = 14):
    for n0 in range(1, n0_max + 1):
        for total in range(4, parts_total_max + 1):
            for parts in _partitions(total, total):
                if len(parts) >= 2 and n0 + total <= n_max:
                    yield n0, tuple(parts)


def verify_closed_forms(t0_max: int = 5, p_max: int = 4, parts_total_max: int = 8, n0_max: int = 3,
                        n_max: int = 14, params: list[StarParams] | None = None,
                        joins: list[tuple[int, tuple[int, ...]]] | None = None) -> VerifyReport:
    """Closed-form polynomials against exact determinants; tabled spectra
    against numeric spectra, with the S(1,-p) table discrepancy whitelisted."""
    if params is None:
        params = [sp for sp in iter_star_params(t0_max, p_max, parts_total_max, n_max=n_max)]
    if joins is None:
        joins = list(join_grid(n0_max, parts_total_max, n_max))
    rep = VerifyReport("closed-forms", {"t0_max": t0_max, "p_max": p_max, "parts_total_max": parts_total_max,
                                         "n0_max": n0_max, "n_max": n_max})
    poly_bad, spec_bad, bracket_bad, join_bad = [], [], [], []
    flagged, expected = [], []
    family = 0
    with _Timer() as tm:
        for sp in params:
            g = star_extension(sp)
            m = anti_adjacency(g)
            if star_char_poly(sp).expand() != char_poly_exact(m):
                poly_bad.append({"claim": "star_char_poly", "params": str(sp), "detail": "expansion differs"})
            if not theorem1_predicate(sp):
                continue
            family += 1
            cs = closed_form_spectrum(sp)
            numeric = eigenvalues(m).values
            disc = cs.extra["discrepancies"]
            if is_t0_1_q_0_subcase(sp):
                expected.append(str(sp))
            if disc:
                flagged.append(str(sp))
            elif not _numeric_matches(cs.values, numeric):
                spec_bad.append({"claim": "closed_form_spectrum", "params": str(sp),
                                 "detail": "unflagged mismatch with numeric spectrum",
                                 "closed_form": list(cs.values), "numeric": list(numeric)})
            if not _numeric_matches(sorted(cs.extra["exact_values"], reverse=True), numeric):
                spec_bad.append({"claim": "exact_values", "params": str(sp),
                                 "detail": "factored roots differ from numeric spectrum"})
            for b in cs.extra["brackets"]:
                if not b["confirmed"] and not is_t0_1_q_0_subcase(sp):
                    bracket_bad.append({"claim": "brackets", "params": str(sp), "detail": b["slot"]})
        for n0, parts in joins:
            g = join(complete(n0), complete_multipartite(parts))
            fp = join_char_poly(n0, parts)
            if fp.expand() != char_poly_exact(anti_adjacency(g)):
                join_bad.append({"claim": "join_char_poly", "params": f"K{n0} v K{parts}",
                                 "detail": "expansion differs"})
            if len(parts) == 2 and join_core(n0, parts)(-2) != -4 * parts[0] * parts[1]:
                join_bad.append({"claim": "join_core(-2)", "params": f"K{n0} v K{parts}",
                                 "detail": "f(-2) != -4 n1 n2"})
    rep.totals = {"star_params": len(params), "family": family, "joins": len(joins)}
    rep.verdicts = {
        "star_char_poly": not poly_bad,
        "join_char_poly": not join_bad,
        "spectrum": not spec_bad,
        "brackets": not bracket_bad,
        "whitelist_exact": sorted(flagged) == sorted(expected),
    }
    rep.stats = {"flagged": sorted(flagged), "whitelist": sorted(expected)}
    rep.counterexamples = poly_bad + join_bad + spec_bad + bracket_bad
    rep.duration = tm.elapsed
    return rep


def verify_hl(t0_max: int = 5, p_max: int = 8, parts_total_max: int = 10, n_max: int = 20) -> VerifyReport:
    """Closed-form HL-index against numeric medians; disagreements must be
    exactly the zero-median t0 = 1, q = 0 subcase."""
    from .hlindex import hl_agreement, is_zero_median_subcase

    rep = VerifyReport("hl", {"t0_max": t0_max, "p_max": p_max, "parts_total_max": parts_total_max,
                               "n_max": n_max})
    disagree, expected, premise_bad = [], [], []
    regimes: dict[str, int] = {}
    count = 0
    with _Timer() as tm:
        for sp in iter_star_params(t0_max, p_max, parts_total_max, n_max=n_max):
            if not theorem1_predicate(sp):
                continue
            count += 1
            r = hl_agreement(sp)
            regimes[r.regime] = regimes.get(r.regime, 0) + 1
            if sp.n >= 3 and not (r.xi_H <= EIG_TOL and r.xi_L <= EIG_TOL and abs(r.R - abs(r.xi_L)) <= EIG_TOL):
                premise_bad.append({"claim": "hl.premise", "params": str(sp), "detail": "median eigenvalue > 0"})
            if is_zero_median_subcase(sp):
                expected.append(str(sp))
            if not r.agree:
                disagree.append(str(sp))
                if not is_zero_median_subcase(sp):
                    rep.counterexamples.append({"claim": "hl", "params": str(sp), "detail": "; ".join(r.notes),
                                                "result": r.to_json()})
    rep.totals = {"family": count}
    rep.verdicts = {"hl.agreement": sorted(disagree) == sorted(expected), "hl.premise": not premise_bad}
    rep.stats = {"regimes": dict(sorted(regimes.items())), "disagreements": sorted(disagree),
                 "expected": sorted(expected)}
    rep.counterexamples += premise_bad
    rep.duration = tm.elapsed
    return rep


def verify_table1(width: Fraction = Fraction(1, 10**14)) -> VerifyReport:
    rep = VerifyReport("table1", {"fixtures": 12})
    rows, bad = [], []
    with _Timer() as tm:
        for f in table1_fixtures():
            cp = char_poly_exact(anti_adjacency(star_extension(f.params)))
            roots = []
            for r in isolate_real_roots(cp, width):
                roots.extend([r] * r.multiplicity)
            xi2 = roots[1]
            positive = positive_root_count(cp) >= 2 and xi2.lo > 0
            row = {"label": f.label, "params": str(f.params), "xi2": xi2.mid, "xi2_positive": positive}
            if f.xi2_closed is not None:
                row["expected"] = f.xi2_expr
                row["ok"] = abs(xi2.mid - f.closed_value) <= 1e-10 and positive
            else:
                lo = f.printed_lower
                row["expected"] = f.xi2_printed
                row["ok"] = lo <= xi2.mid < lo + 0.001 and positive
            rows.append(row)
            if not row["ok"]:
                bad.append({"claim": "table1", "params": str(f.params), "detail": f"{f.label}: xi2={xi2.mid!r}"})
    rep.totals = {"fixtures": len(rows)}
    rep.verdicts = {"table1": not bad}
    rep.stats = {"rows": rows}
    rep.counterexamples = bad
    rep.duration = tm.elapsed
    return rep


def _random_connected(rng: random.Random, n_min: int = 3, n_max: int = 10) -> Graph:
    while True:
        n = rng.randint(n_min, n_max)
        dens = rng.uniform(0.2, 0.9)
        edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < dens]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g


def _preserving_subset(g: Graph, rng: random.Random) -> list[int] | None:
    """Greedily delete random vertices while the subgraph keeps every
    eccentricity and distance; returns a proper subset or None."""
    keep = list(range(g.n))
    target = rng.randint(2, g.n - 1)
    order = list(range(g.n))
    rng.shuffle(order)
    for v in order:
        if len(keep) <= target:
            break
        trial = [u for u in keep if u != v]
        if induced_subgraph(g, trial).is_connected() and submatrix_conditions(g, trial):
            keep = trial
    return keep if len(keep) < g.n else None


def verify_interlacing(samples: int = 500, seed: int = 0, max_attempts: int = 100_000) -> VerifyReport:
    rng = random.Random(seed)
    rep = VerifyReport("interlacing", {"samples": samples, "seed": seed})
    bad = []
    attempts = found = 0
    sizes: dict[int, int] = {}
    with _Timer() as tm:
        while found < samples and attempts < max_attempts:
            attempts += 1
            g = _random_connected(rng)
            try:
                vs = _preserving_subset(g, rng)
            except SubmatrixPropertyError as exc:
                bad.append({"claim": "submatrix", "graph6": to_graph6(g), "detail": str(exc)})
                continue
            if vs is None:
                continue
            found += 1
            sizes[len(vs)] = sizes.get(len(vs), 0) + 1
            big = eigenvalues(anti_adjacency(g)).values
            small = eigenvalues(anti_adjacency(induced_subgraph(g, vs))).values
            if not interlaces(big, small, EIG_TOL):
                bad.append({"claim": "interlacing", "graph6": to_graph6(g), "subset": vs,
                            "detail": "interlacing violated"})
    rep.totals = {"attempts": attempts, "pairs": found}
    rep.verdicts = {"interlacing": not bad and found == samples}
    rep.stats = {"subset_sizes": {str(k): v for k, v in sorted(sizes.items())}}
    rep.counterexamples = bad
    rep.duration = tm.elapsed
    return rep


def path_nullity_formula(m: int) -> int:
    """Nullity of the anti-adjacency matrix of P_m for m >= 6."""
    k = m // 2
    return 2 * k - 3 if m % 2 else 2 * k - 4


def verify_nullity_paths(k_min: int = 3, k_max: int = 12) -> VerifyReport:
    rep = VerifyReport("nullity", {"k_min": k_min, "k_max": k_max})
    rows, bad = [], []
    with _Timer() as tm:
        for k in range(k_min, k_max + 1):
            for m in (2 * k, 2 * k + 1):
                got = exact_nullity(anti_adjacency(path(m)))
                want = path_nullity_formula(m)
                rows.append({"m": m, "nullity": got, "expected": want})
                if got != want:
                    bad.append({"claim": "nullity", "params": f"P{m}", "detail": f"{got} != {want}"})
        p4 = exact_nullity(anti_adjacency(path(4)))
        if p4 != 0:
            bad.append({"claim": "nullity", "params": "P4", "detail": f"{p4} != 0"})
    rep.totals = {"paths": len(rows)}
    rep.verdicts = {"nullity": not bad}
    rep.stats = {"rows": rows}
    rep.counterexamples = bad
    rep.duration = tm.elapsed
    return rep


# ---------------------------------------------------------------------------
# mutants: deliberately wrong predicates the harness must reject


def _mutant_v_bound(bound: int):
    def cond(t0: int, p: int, q: int) -> bool:
        if t0 >= 5:
            return p + q <= bound
        return theorem1_conditions(t0, p, q)
    return cond


MUTANTS: dict[str, tuple[str, Callable]] = {
    # centre >= 5 allows one extra part: caught on the star grid (needs n = 8)
    "theorem1-v-bound-3": ("grid", lambda sp: _mutant_v_bound(3)(sp.t0, sp.p, sp.q)),
    # centre >= 5 allows only one part: caught exhaustively at n = 7 by S(5,-2)
    "theorem1-v-bound-1": ("theorem1", _mutant_v_bound(1)),
    "theorem2-tripartite": ("theorem2", lambda parts: parts in (2, 3)),
    "smith-bipartite-only": ("smith", lambda parts: parts == 2),
}


def run_mutant(name: str, n_max: int = 7, workers: int | None = None) -> VerifyReport:
    kind, fn = MUTANTS[name]
    if kind == "grid":
        rep = verify_theorem1_grid(predicate=fn)
    elif kind == "theorem1":
        rep = verify_theorem1(n_max, workers=workers, conditions=fn)
    elif kind == "theorem2":
        rep = verify_theorem2(n_max, workers=workers, structural=fn)
    else:
        rep = verify_smith(n_max, workers=workers, structural=fn)
    rep.claim = f"mutant:{name}"
    return rep
