"""Command-line front end: `hws <command> --q Q [options]`."""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from datetime import datetime, timezone
from math import comb
from typing import Any

from . import formulas
from .codes import SUBSPACE_BUDGET, brute_force_spectra, build_rm22
from .correspondence import verify_correspondence
from .errors import HwsError
from .exactalg import gaussian_binomial, prime_power
from .geometry import census, maximal_zero_sets
from .gwp import WeightPolynomial, gwp_invert, row_sums_match
from .pipeline import run_rm22
from .verify import Check, verify

COMMANDS = ("spectra", "betti", "gwp", "conics", "hamming", "correspondence", "verify")
METHODS = {"spectra": ("pipeline", "closed", "brute"), "betti": ("pipeline", "closed"),
           "gwp": ("pipeline", "closed"), "hamming": ("closed", "pipeline"),
           "conics": ("census",), "correspondence": ("scan",), "verify": ("all",)}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hws", description="Higher weight spectra and Betti "
                                "numbers of the Reed-Muller codes RM_q(2,2).")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--q", type=int, required=True, help="field order (prime power)")
        s.add_argument("--format", choices=("table", "json", "csv"), default="table")
        s.add_argument("--method", default=None,
                       help="one of: " + ", ".join(METHODS[name]))
        s.add_argument("--threads", type=int, default=1)
        s.add_argument("--budget-subspaces", type=int, default=SUBSPACE_BUDGET)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--timestamp", action="store_true", help="prepend a timestamp header")
        if name == "spectra":
            s.add_argument("--r-max", type=int, default=None)
        if name == "betti":
            s.add_argument("--elongation", type=int, default=None,
                           help="elongation l (default: all)")
        if name == "correspondence":
            s.add_argument("--d", type=int, default=2)
            s.add_argument("--m", type=int, default=2)
        if name == "verify":
            s.add_argument("--level", choices=("fast", "full"), default="fast")
    return p


def _validate(args) -> None:
    try:
        prime_power(args.q)
    except HwsError as e:
        raise UsageError(f"--q: {e}") from None
    method = args.method or METHODS[args.command][0]
    if method not in METHODS[args.command]:
        raise UsageError(f"--method: {method!r} is not valid for {args.command}")
    args.method = method
    if args.threads < 1:
        raise UsageError("--threads: must be positive")
    if args.budget_subspaces < 1:
        raise UsageError("--budget-subspaces: must be positive")
    k = 4 if args.q == 2 else 6
    if getattr(args, "elongation", None) is not None and not 0 <= args.elongation < k:
        raise UsageError(f"--elongation: must be in 0..{k - 1}")
    if getattr(args, "r_max", None) is not None and args.r_max < 0:
        raise UsageError("--r-max: must be nonnegative")


# -- commands ---------------------------------------------------------------------

def _eq(name: str, expected, actual) -> Check:
    return Check(name, "pass" if expected == actual else "fail", expected, actual)


def _spectra(args) -> tuple[dict, list[Check]]:
    if args.method == "closed":
        t = formulas.closed_spectra(args.q)
    elif args.method == "brute":
        t = brute_force_spectra(build_rm22(args.q), args.r_max,
                                budget=args.budget_subspaces, threads=args.threads)
    else:
        t = run_rm22(args.q).spectra
    rows = [r for r in t.rows() if args.r_max is None or r <= args.r_max]
    checks = [Check(f"row sum r={r}", "pass" if t.row_sum(r) == g else "fail", g, t.row_sum(r))
              for r in rows for g in [gaussian_binomial(t.k, r, args.q)]]
    A = {r: v for r, v in t.as_dict().items() if int(r) in rows}
    return {"A": A}, checks


def _betti_tables(args) -> dict:
    k = 4 if args.q == 2 else 6
    levels = [args.elongation] if args.elongation is not None else list(range(k))
    if args.method == "closed":
        return {lv: formulas.closed_betti(args.q, lv).table for lv in levels}
    res = run_rm22(args.q)
    return {lv: res.tables[lv] for lv in levels}


def _betti(args) -> tuple[dict, list[Check]]:
    from .resolution import bs_verify
    tables = _betti_tables(args)
    data = {str(lv): {"beta": t.as_dict(),
                      "rows": {str(r): {str(i): v for i, v in row.items()}
                               for r, row in t.row_form().items()},
                      "phi": {str(j): v for j, v in t.phi().items()}}
            for lv, t in tables.items()}
    checks = []
    for lv, t in tables.items():
        ok, res = bs_verify(t)
        checks.append(Check(f"Boij-Soderberg identities l={lv}", "pass" if ok else "fail",
                            [0] * len(res), res))
    return data, checks


def _gwp(args) -> tuple[dict, list[Check]]:
    if args.method == "closed":
        polys = formulas.closed_gwp(args.q)
    else:
        polys = run_rm22(args.q).polys
    data = {"P": {str(w): list(p.coeffs) for w, p in sorted(polys.items())}}
    k = 4 if args.q == 2 else 6
    bad = row_sums_match(gwp_invert(polys, args.q, k, args.q * args.q))
    checks = [Check("inverted spectra: row sums = Gaussian binomials",
                    "pass" if not bad else "fail", [], [list(b) for b in bad])]
    return data, checks


def _conics(args) -> tuple[dict, list[Check]]:
    q = args.q
    c = census(q)
    data: dict[str, Any] = {"by_class": c.by_class, "by_category": c.by_category,
                            "affine_zeros": {k: sorted(v) for k, v in
                                             c.affine_zeros_by_category.items()},
                            "first_spectrum": {str(w): v for w, v in c.first_spectrum.items()}}
    checks = [Check("class counts", "pass" if c.by_class == formulas.class_counts(q)
                    else "fail", formulas.class_counts(q), c.by_class),
              Check("category counts", "pass" if c.by_category == formulas.category_counts(q)
                    else "fail", formulas.category_counts(q), c.by_category)]
    if q >= 3:
        mx = sorted(maximal_zero_sets(q))
        data["maximal"] = mx
        exp = sorted(formulas.maximal_categories(q))
        checks.append(Check("maximal zero sets", "pass" if mx == exp else "fail", exp, mx))
    return data, checks


def _hamming(args) -> tuple[dict, list[Check]]:
    closed = list(formulas.hamming_weights(args.q))
    if args.method == "pipeline":
        sp = run_rm22(args.q).spectra
        got = [sp.d(r) for r in range(1, sp.k + 1)]
    else:
        got = closed
    return {"d": got}, [Check("generalized Hamming weights", "pass" if got == closed else "fail",
                              closed, got)]


def _correspondence(args) -> tuple[dict, list[Check]]:
    rep = verify_correspondence(args.q, args.d, args.m)
    data = {"d": args.d, "m": args.m, "n_affine": rep.n_affine,
            "n_projective": rep.n_projective,
            "affine_minimal": {str(i): len(v) for i, v in rep.affine_minimal.items()},
            "projective_minimal": {str(i): len(v) for i, v in rep.projective_minimal.items()},
            "witness_levels": {str(i): v for i, v in rep.witness_levels.items()}}
    checks = [Check("direction (a)", "pass" if rep.direction_a else "fail", True,
                    rep.direction_a),
              Check("direction (b)", "pass" if rep.direction_b else "fail", True,
                    rep.direction_b),
              _eq("ranks", [comb(args.m + args.d, args.d)] * 2,
                  [rep.rank_affine, rep.rank_projective])]
    return data, checks


def _verify(args) -> tuple[dict, list[Check]]:
    checks = verify(args.q, args.level, args.threads, args.budget_subspaces)
    return {"level": args.level, "passed": sum(c.ok for c in checks),
            "failed": sum(not c.ok for c in checks)}, checks


HANDLERS = {"spectra": _spectra, "betti": _betti, "gwp": _gwp, "conics": _conics,
            "hamming": _hamming, "correspondence": _correspondence, "verify": _verify}


# -- rendering --------------------------------------------------------------------

def _flatten(prefix: tuple, obj, out: list) -> None:
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(prefix + (k,), v, out)
    elif isinstance(obj, list) and obj and all(not isinstance(x, (dict, list)) for x in obj):
        for i, v in enumerate(obj):
            out.append(prefix + (i, v))
    else:
        out.append(prefix + (obj,))


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        rows: list = []
        _flatten(("data",), report["data"], rows)
        for c in report["checks"]:
            rows.append(("check", c["name"], c["status"]))
        for r in rows:
            w.writerow(r)
        return buf.getvalue()
    return _render_table(report)


def _render_table(report: dict) -> str:
    cmd, data = report["command"], report["data"]
    lines = [f"# {cmd} q={report['q']} method={report['method']}"]
    if cmd == "spectra":
        for r, row in data["A"].items():
            lines.append(f"r={r}: " + ", ".join(f"A_{w}={v}" for w, v in row.items()))
    elif cmd == "betti":
        for lv, t in data.items():
            rows = t["rows"]
            width = 1 + max((int(i) for row in rows.values() for i in row), default=0)
            lines.append(f"l={lv}")
            lines.append("j\\i " + " ".join(f"{i:>9}" for i in range(width)))
            for r, row in rows.items():
                lines.append(f"{r:>3} " + " ".join(f"{row.get(str(i), 0):>9}"
                                                  for i in range(width)))
    elif cmd == "gwp":
        for w, cs in data["P"].items():
            lines.append(f"P_{w}(Z) = {WeightPolynomial(int(w), tuple(cs))}")
    else:
        for key, val in data.items():
            lines.append(f"{key}: {json.dumps(val)}")
    for c in report["checks"]:
        lines.append(f"[{c['status']}] {c['name']}")
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        _validate(args)
    except UsageError as e:
        print(f"hws: error: {e}", file=sys.stderr)
        return 2
    random.seed(args.seed)
    try:
        data, checks = HANDLERS[args.command](args)
    except HwsError as e:
        print(f"hws: error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    report = {"q": args.q, "command": args.command, "method": args.method, "data": data,
              "checks": [c.as_dict() for c in checks]}
    text = render(report, args.format)
    if args.timestamp:
        text = f"# generated {datetime.now(timezone.utc).isoformat()}\n" + text
    out.write(text)
    return 0 if all(c.ok for c in checks) else 1


def main() -> None:
    sys.exit(run())
