"""eccentra command line.

Exit codes: 0 success / membership true / verification pass,
1 membership false / verification fail, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .. import verify as V
from ..characterize import (
    Undecidable, least_minus2_predicate, smith_check, star_report, table1_fixtures,
    theorem1_check, theorem1_predicate, theorem2_check,
)
from ..closedform import closed_form_spectrum
from ..extension import parse_star_params, recognize_star_extension, star_extension
from ..hlindex import hl_agreement, hl_numeric
from ..poly import symbolic_roots
from ..spectral import EXACT_MAX_N, TAU_EIG, anti_adjacency, char_poly_exact, eigenvalues
from .graph6 import Graph6Error, parse_graph6, to_graph6

SCHEMA = "eccentra.report/1"
DIGITS = 12


class UsageError(Exception):
    pass


def _round(obj):
    """Floats to 12 significant digits, recursively."""
    if isinstance(obj, float):
        return float(f"{obj:.{DIGITS}g}")
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _emit(args, payload: dict, text: str) -> None:
    if args.text:
        sys.stdout.write(text.rstrip("\n") + "\n")
    else:
        sys.stdout.write(json.dumps(_round({"schema": SCHEMA, **payload}), sort_keys=True, indent=2) + "\n")


def _fmt(x: float) -> str:
    return f"{x:.{DIGITS}g}"


# ---------------------------------------------------------------------------
# inputs


def _add_input(p: argparse.ArgumentParser, params: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--g6", help="graph in graph6 format")
    g.add_argument("--g6-file", help="file with one graph6 string per line (first graph used)")
    if params:
        g.add_argument("--params", help='star extension literal, e.g. "S(3,-1,2^3)"')


def _read_input(args):
    """(graph, params or None, input descriptor)."""
    try:
        if getattr(args, "params", None):
            sp = parse_star_params(args.params)
            return star_extension(sp), sp, {"params": str(sp)}
        if args.g6 is not None:
            return parse_graph6(args.g6), None, {"graph6": args.g6.strip()}
        with open(args.g6_file) as fh:
            line = next((ln.strip() for ln in fh if ln.strip()), None)
        if line is None:
            raise UsageError(f"{args.g6_file}: no graph found")
        return parse_graph6(line), None, {"graph6": line}
    except (Graph6Error, ValueError, OSError) as exc:
        raise UsageError(str(exc)) from exc


def _solver(args) -> tuple[str, float]:
    if args.tolerance is None:
        return "lapack", TAU_EIG
    if not 0 < args.tolerance < 1:
        raise UsageError("--tolerance must lie in (0, 1)")
    return "jacobi", args.tolerance


def _require_connected(g):
    if not g.is_connected():
        raise UsageError("graph must be connected")
    if g.n < 2:
        raise UsageError("graph must have at least two vertices")


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(args) -> int:
    g, sp, src = _read_input(args)
    _require_connected(g)
    solver, tol = _solver(args)
    spec = eigenvalues(anti_adjacency(g), solver=solver, tol=tol)
    payload = {"kind": "spectrum", "input": src, "n": g.n, "spectrum": spec.to_json()}
    if g.n <= EXACT_MAX_N:
        cp = char_poly_exact(anti_adjacency(g))
        payload["char_poly"] = cp.to_json()
        payload["exact"] = symbolic_roots(cp, DIGITS)
    if sp is not None and theorem1_predicate(sp):
        cf = closed_form_spectrum(sp)
        payload["closed_form"] = cf.to_json()
    lines = [f"n = {g.n}"]
    exact = payload.get("exact")
    for i, v in enumerate(spec.values):
        extra = f"   = {exact[i]}" if exact else ""
        lines.append(f"xi_{i + 1:<3d} {_fmt(v):>20s}{extra}")
    if "closed_form" in payload and payload["closed_form"]["discrepancies"]:
        lines += [f"note: {d}" for d in payload["closed_form"]["discrepancies"]]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    g, sp, src = _read_input(args)
    _require_connected(g)
    claim = args.claim
    try:
        if claim == "theorem1":
            rep = star_report(sp) if sp is not None else theorem1_check(g, src.get("graph6"))
            body = rep.to_json()
            verdict = rep.spectral_verdict and rep.structural_verdict
        elif claim == "theorem2":
            rep = theorem2_check(g, src.get("graph6") or src.get("params"))
            body = rep.to_json()
            verdict = rep.spectral_verdict and rep.structural_verdict
        elif claim == "least-2":
            rep = least_minus2_predicate(g)
            body = rep.to_json()
            verdict = rep.spectral and rep.structural
        else:
            rep = smith_check(g, src.get("graph6") or src.get("params"))
            body = rep.to_json()
            verdict = rep.spectral_verdict and rep.structural_verdict
    except Undecidable as exc:
        raise UsageError(str(exc)) from exc
    payload = {"kind": "classify", "claim": claim, "input": src, "verdict": bool(verdict), "report": body}
    lines = [f"{claim}: {'true' if verdict else 'false'}"]
    for k in ("spectral_verdict", "structural_verdict", "agree", "spectral", "structural", "form",
              "single_coclique_join"):
        if k in body:
            lines.append(f"  {k}: {body[k]}")
    for w in body.get("witnesses", []):
        lines.append(f"  witness: {w}")
    _emit(args, payload, "\n".join(lines))
    return 0 if verdict else 1


def cmd_hl(args) -> int:
    g, sp, src = _read_input(args)
    _require_connected(g)
    solver, tol = _solver(args)
    if sp is None:
        rec = recognize_star_extension(g)
        sp = rec if rec is not None and theorem1_predicate(rec) else None
    if sp is not None and theorem1_predicate(sp):
        res = hl_agreement(sp, solver=solver)
    else:
        res = hl_numeric(eigenvalues(anti_adjacency(g), solver=solver, tol=tol), g.n)
    body = res.to_json()
    payload = {"kind": "hl", "input": src, "result": body}
    lines = [f"n = {res.n}, H = {res.H}, L = {res.L}",
             f"xi_H = {_fmt(res.xi_H)}, xi_L = {_fmt(res.xi_L)}, R = {_fmt(res.R)}"]
    if res.regime:
        pred = _fmt(res.predicted) if res.predicted is not None else f"in ({_fmt(res.interval[0])}, {_fmt(res.interval[1])})"
        lines.append(f"regime {res.regime}: predicted {pred}; agree = {res.agree}")
    lines += [f"note: {m}" for m in res.notes]
    _emit(args, payload, "\n".join(lines))
    return 0 if res.agree in (None, True) else 1


def cmd_build(args) -> int:
    try:
        sp = parse_star_params(args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    g = star_extension(sp)
    if g.n > 62:
        raise UsageError("graph6 output supports n <= 62")
    g6 = to_graph6(g)
    _emit(args, {"kind": "build", "params": str(sp), "n": g.n, "graph6": g6}, g6)
    return 0


def cmd_table1(args) -> int:
    rep = V.verify_table1()
    rows = rep.stats["rows"]
    fixtures = {f.label: f for f in table1_fixtures()}
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label", "params", "xi2", "xi2_exact", "expected", "ok"])
    out_rows = []
    for row in rows:
        cp = char_poly_exact(anti_adjacency(star_extension(fixtures[row["label"]].params)))
        exact = symbolic_roots(cp, DIGITS)[1]
        w.writerow([row["label"], row["params"], _fmt(row["xi2"]), exact, row["expected"], row["ok"]])
        out_rows.append({**row, "xi2_exact": exact})
    if args.json:
        _emit(args, {"kind": "table1", "rows": out_rows, "passed": rep.passed}, "")
    else:
        sys.stdout.write(buf.getvalue())
    return 0 if rep.passed else 1


def cmd_verify(args) -> int:
    what = args.what
    try:
        workers = V.resolve_workers(args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    n = args.n
    if n is not None and not 2 <= n <= 8:
        raise UsageError("--n must lie in [2, 8]")
    if n == 8 and not args.allow_n8:
        raise UsageError("n = 8 scans 268M labeled graphs; pass --allow-n8 to confirm")
    if what == "theorem1":
        rep = V.verify_theorem1(n or 7, workers=workers)
    elif what == "theorem2":
        rep = V.verify_theorem2(n or 7, workers=workers)
    elif what == "smith":
        rep = V.verify_smith(n or 7, workers=workers)
    elif what == "theorem1-grid":
        rep = V.verify_theorem1_grid()
    elif what == "closed-forms":
        rep = V.verify_closed_forms()
    elif what == "hl":
        rep = V.verify_hl()
    elif what == "table1":
        rep = V.verify_table1()
    elif what == "interlacing":
        rep = V.verify_interlacing(args.samples, args.seed)
    elif what == "nullity":
        rep = V.verify_nullity_paths(args.k_min, args.k_max)
    else:
        rep = V.run_mutant(what.removeprefix("mutant:"), n or 7, workers)
    if args.text:
        sys.stdout.write(rep.text(args.timing) + "\n")
    else:
        sys.stdout.write(json.dumps(_round(rep.to_json(args.timing)), sort_keys=True, indent=2) + "\n")
    return 0 if rep.passed else 1


def cmd_enumerate(args) -> int:
    if not 2 <= args.n <= 8:
        raise UsageError("--n must lie in [2, 8]")
    shard = None
    if args.shard:
        try:
            i, k = (int(x) for x in args.shard.split("/"))
            shard = (i, k)
            V.kernel.shard_range(args.n, shard)
        except ValueError as exc:
            raise UsageError(f"bad --shard {args.shard!r}: expected INDEX/COUNT") from exc
    graphs = [to_graph6(g) for g in V.enumerate_connected(args.n, shard, dedup=args.dedup)]
    payload = {"kind": "enumerate", "n": args.n, "shard": args.shard, "dedup": args.dedup,
               "count": len(graphs), "graph6": graphs}
    _emit(args, payload, "\n".join(graphs))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true", help="human-readable output")
    common.add_argument("--tolerance", type=float, default=None,
                        help="eigensolver tolerance; selects the Jacobi solver (default: LAPACK, 1e-12)")

    ap = argparse.ArgumentParser(prog="eccentra", description="Anti-adjacency spectra and classifications.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="anti-adjacency spectrum")
    _add_input(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", parents=[common], help="classify against a characterization")
    p.add_argument("claim", choices=["theorem1", "theorem2", "least-2", "smith"])
    _add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("hl", parents=[common], help="HL-index, numeric and closed form")
    _add_input(p)
    p.set_defaults(func=cmd_hl)

    p = sub.add_parser("build", parents=[common], help="emit graph6 for a star extension")
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("table1", parents=[common], help="regenerate the F1-F12 table as CSV")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", parents=[common], help="run a verification")
    p.add_argument("what", choices=["theorem1", "theorem2", "smith", "theorem1-grid", "closed-forms", "hl",
                                    "table1", "interlacing", "nullity", *(f"mutant:{m}" for m in V.MUTANTS)])
    p.add_argument("--n", type=int, default=None, help="largest order for exhaustive scans (default 7)")
    p.add_argument("--workers", type=int, default=None, help="worker processes (env ECCENTRA_WORKERS)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--k-min", type=int, default=3)
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--timing", action="store_true", help="include wall-clock duration")
    p.add_argument("--allow-n8", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list connected graphs in graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--shard", default=None, help="INDEX/COUNT")
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"eccentra: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
