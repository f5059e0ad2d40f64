"""Command-line front end: torsion values, heights, tables, reports.

All configuration is by flags (no environment variables), and identical
invocations produce byte-identical output.  Exit codes: 0 success, 1 a
verification failed, 2 bad configuration, 3 quadrature failed to converge.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

import numpy as np

from . import chow, forms, torsion
from .constants import ExactConstant, ZETA_M1, ZETA_PRIME_M1, atom_table
from .radial import NonConvergence, QuadratureConfig

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_NONCONVERGENCE = 3


def _fmt(x: float) -> str:
    return format(x, ".17g")


def format_exact(c: ExactConstant, expand_tau: bool = False) -> str:
    """Canonical human-readable form, folding the base-line torsion when possible."""
    if expand_tau:
        return str(c)
    t = torsion.closed_tau_p1()
    q = -c.coefficient(ZETA_PRIME_M1) / 4
    if q != 0:
        rest = c - t.scale(q)
        if rest.coefficient(ZETA_PRIME_M1) == 0 and rest.coefficient(ZETA_M1) == 0:
            mult = "" if abs(q) == 1 else f"{abs(q)}*"
            if rest.is_zero:
                sign = "-" if q < 0 else ""
            else:
                sign = str(rest) + (" - " if q < 0 else " + ")
            return f"{sign}{mult}tau_P1"
    return str(c)


def _parse_n_list(args) -> List[int]:
    if getattr(args, "n_list", None):
        try:
            values = [int(s) for s in args.n_list.split(",") if s != ""]
        except ValueError:
            raise SystemExit(EXIT_CONFIG)
        if not values or any(v < 0 for v in values):
            print("error: ruling indices must be integers >= 0", file=sys.stderr)
            raise SystemExit(EXIT_CONFIG)
        return values
    if getattr(args, "n_max", None) is not None:
        if args.n_max < 0:
            print("error: --n-max must be >= 0", file=sys.stderr)
            raise SystemExit(EXIT_CONFIG)
        return list(range(args.n_max + 1))
    if getattr(args, "n", None) is not None:
        if args.n < 0:
            print("error: --n must be >= 0", file=sys.stderr)
            raise SystemExit(EXIT_CONFIG)
        return [args.n]
    print("error: one of --n / --n-list / --n-max is required", file=sys.stderr)
    raise SystemExit(EXIT_CONFIG)


def _quad_config(args) -> QuadratureConfig:
    try:
        return QuadratureConfig(target_tol=args.quad_tol,
                                max_refinement=args.max_refinement,
                                scheme=args.scheme)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_torsion(args) -> int:
    cfg = _quad_config(args)
    rows = []
    for n in _parse_n_list(args):
        res = torsion.main_theorem(n, cfg)
        values = {"rr": res.tau_rr, "bb": res.tau_bb, "closed": res.tau_closed}
        routes = ["rr", "bb", "closed"] if args.route == "all" else [args.route]
        rows.append((n, res, values, routes))
    if args.format == "json":
        payload = []
        for n, res, values, routes in rows:
            entry = {"n": n, "routes": {}}
            for r in routes:
                entry["routes"][r] = {"exact": values[r].to_json_dict(),
                                      "float": values[r].to_float()}
            entry["tau_omega1"] = res.tau_omega1.to_float()
            entry["tau_omega2"] = res.tau_omega2.to_float()
            entry["vol"] = str(res.vol)
            entry["main_theorem_value"] = {
                "exact": res.main_theorem_value.to_json_dict(),
                "float": res.main_theorem_value.to_float()}
            payload.append(entry)
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("n,route,value_float,value_exact")
        for n, res, values, routes in rows:
            for r in routes:
                print(f"{n},{r},{_fmt(values[r].to_float())},"
                      f"\"{format_exact(values[r], args.expand_tau)}\"")
    else:
        for n, res, values, routes in rows:
            print(f"n = {n}  (volume {res.vol})")
            for r in routes:
                print(f"  tau[{r:6s}] = {format_exact(values[r], args.expand_tau)}"
                      f"  = {_fmt(values[r].to_float())}")
            print(f"  tau(middle twist) = {format_exact(res.tau_omega1, args.expand_tau)}")
            print(f"  tau(top twist)    = "
                  f"{format_exact(res.tau_omega2, args.expand_tau)}")
            print(f"  tau - log Vol     = "
                  f"{format_exact(res.main_theorem_value, args.expand_tau)}"
                  f"  = {_fmt(res.main_theorem_value.to_float())}")
    return EXIT_OK


def cmd_height(args) -> int:
    ns = _parse_n_list(args)
    if args.trace:
        trace: List[dict] = []
        values = []
        for n in ns:
            _, s2 = chow.segre_classes(n, trace)
            value = chow.pushforward_deg(s2, trace)
            values.append((n, value.rational_part))
        print(json.dumps(trace, indent=2), file=sys.stderr)
    else:
        values = [(n, torsion.height(n)) for n in ns]
    if args.format == "json":
        print(json.dumps([{"n": n, "height": str(h), "height_float": float(h)}
                          for n, h in values], indent=2))
    elif args.format == "csv":
        print("n,height")
        for n, h in values:
            print(f"{n},{h}")
    else:
        for n, h in values:
            print(h if len(values) == 1 else f"n = {n}: {h}")
    return EXIT_OK


def cmd_table(args) -> int:
    cfg = _quad_config(args)
    rows = torsion.table_rows(_parse_n_list(args), cfg)
    if args.format == "json":
        print(json.dumps([{**r, "height": str(r["height"])} for r in rows], indent=2))
    else:
        text = torsion.table_csv(rows)
        if args.format == "csv":
            sys.stdout.write(text)
        else:
            for line in text.splitlines():
                print("  ".join(f"{cell:>22s}" for cell in line.split(",")))
    return EXIT_OK


def cmd_integrals(args) -> int:
    cfg = _quad_config(args)
    failed = False
    out_rows = []
    for n in _parse_n_list(args):
        for m in torsion.named_integrals(n, cfg):
            failed = failed or not m.passed
            out_rows.append({
                "name": m.name, "n": m.n,
                "expected": m.closed_form.to_float(),
                "computed": m.quadrature_value,
                "abs_error": m.abs_error, "pass": m.passed,
                "exact": format_exact(m.closed_form, expand_tau=True),
            })
    if args.format == "json":
        print(json.dumps(out_rows, indent=2))
    elif args.format == "csv":
        print("name,n,expected,computed,abs_error,pass")
        for r in out_rows:
            print(f"{r['name']},{r['n']},{_fmt(r['expected'])},"
                  f"{_fmt(r['computed'])},{_fmt(r['abs_error'])},"
                  f"{str(r['pass']).lower()}")
    else:
        for r in out_rows:
            mark = "PASS" if r["pass"] else "FAIL"
            print(f"{mark}  n={r['n']:<3d} {r['name']:<28s} "
                  f"closed={r['exact']:<40s} quad={_fmt(r['computed'])} "
                  f"err={r['abs_error']:.3e}")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_verify(args) -> int:
    cfg = _quad_config(args)
    if args.tol <= 0 or args.height_range < 0:
        print("error: --tol must be positive and --height-range nonnegative",
              file=sys.stderr)
        return EXIT_CONFIG
    report = torsion.verify_all(_parse_n_list(args), cfg, tol=args.tol,
                                height_range=args.height_range)
    if args.format == "json":
        print(report.to_json_text())
    elif args.format == "csv":
        sys.stdout.write(report.to_csv_text())
    else:
        for e in report.entries:
            mark = "PASS" if e.passed else "FAIL"
            nfield = "" if e.n is None else f"n={e.n}"
            print(f"{mark}  {e.name:<38s} {nfield:<6s} "
                  f"computed={_fmt(e.computed)} err={e.abs_error:.3e}")
        print(f"{len(report.entries)} checks, "
              f"{'all passed' if report.all_passed else 'FAILURES PRESENT'}, "
              f"max discrepancy {report.max_abs_error:.3e}")
    return EXIT_OK if report.all_passed else EXIT_VERIFY_FAILED


def cmd_constants(args) -> int:
    rows = [{"atom": label, "reference": value} for label, value in atom_table()]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        print("atom,reference")
        for r in rows:
            print(f"{r['atom']},\"{r['reference']}\"")
    else:
        for r in rows:
            print(f"{r['atom']:<12s} {r['reference']}")
    return EXIT_OK


def cmd_forms(args) -> int:
    if args.u_min <= 0 or args.u_max <= args.u_min or args.grid_points < 2:
        print("error: need 0 < u-min < u-max and at least 2 grid points",
              file=sys.stderr)
        return EXIT_CONFIG
    us = [float(u) for u in np.geomspace(args.u_min, args.u_max, args.grid_points)]
    cat = forms.catalog(args.n)
    if args.form is not None:
        if args.form not in cat:
            print(f"error: unknown form {args.form!r}; catalog: "
                  f"{', '.join(sorted(cat))}", file=sys.stderr)
            return EXIT_CONFIG
        form = cat[args.form]
        print("u,fx,fphi")
        for u in us:
            fx, fphi = form.evaluate(u)
            print(f"{_fmt(u)},{_fmt(fx)},{_fmt(fphi)}")
    else:
        print("form,u,fx,fphi")
        for name, u, fx, fphi in forms.sample_catalog(args.n, us):
            print(f"{name},{_fmt(u)},{_fmt(fx)},{_fmt(fphi)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hirzebruch-torsion",
        description="Exact and numerical verification of analytic torsion, "
                    "heights and invariant-form integrals on ruled surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_quad_flags(p):
        p.add_argument("--quad-tol", type=float, default=1e-10,
                       help="quadrature target tolerance (default 1e-10)")
        p.add_argument("--max-refinement", type=int, default=8,
                       help="adaptive refinement budget (default 8)")
        p.add_argument("--scheme", choices=["gauss_kronrod", "tanh_sinh"],
                       default="gauss_kronrod", help="quadrature scheme")

    def add_n_flags(p, with_max=False):
        p.add_argument("--n", type=int, help="ruling index")
        p.add_argument("--n-list", help="comma-separated ruling indices")
        if with_max:
            p.add_argument("--n-max", type=int, help="iterate n = 0..n-max")

    def add_format_flag(p, default="text"):
        p.add_argument("--format", choices=["text", "csv", "json"], default=default)

    p = sub.add_parser("torsion", help="torsion per route, exact and float")
    add_n_flags(p)
    p.add_argument("--route", choices=["rr", "bb", "closed", "all"], default="all")
    p.add_argument("--expand-tau", action="store_true",
                   help="print raw atoms instead of folding tau_P1")
    add_format_flag(p)
    add_quad_flags(p)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("height", help="exact arithmetic height")
    add_n_flags(p, with_max=True)
    add_format_flag(p)
    p.add_argument("--trace", action="store_true",
                   help="emit the rewrite steps as JSON on stderr")
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("table", help="summary table over a range of n")
    add_n_flags(p, with_max=True)
    add_format_flag(p, default="csv")
    add_quad_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("integrals", help="named integrals vs quadrature")
    add_n_flags(p)
    add_format_flag(p)
    add_quad_flags(p)
    p.set_defaults(func=cmd_integrals)

    p = sub.add_parser("verify", help="full invariant suite; nonzero exit on failure")
    add_n_flags(p, with_max=True)
    p.add_argument("--tol", type=float, default=1e-8,
                   help="pass tolerance for float cross-checks (default 1e-8)")
    p.add_argument("--height-range", type=int, default=20,
                   help="check heights for n = 0..this (default 20)")
    add_format_flag(p)
    add_quad_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("constants", help="atom basis and reference values")
    add_format_flag(p)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("forms", help="dump catalog form coefficients on a u-grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", help="single catalog form (default: all, "
                                  "with a leading name column)")
    p.add_argument("--grid-points", type=int, default=20)
    p.add_argument("--u-min", type=float, default=1e-3)
    p.add_argument("--u-max", type=float, default=1e3)
    p.set_defaults(func=cmd_forms)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonConvergence as exc:
        print(f"error: quadrature did not converge: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except chow.ChowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
