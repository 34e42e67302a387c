"""Command-line front end: ``kummer-asym <command> ...``.

Exit codes: 0 success, 2 usage or domain error, 3 failed internal identity.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from decimal import Decimal
from fractions import Fraction

import mpmath

from . import coefficients as coef
from .bessel import to_mpf
from .errors import DomainError, KummerAsymError
from .expansions import ExpansionFamily, ExpansionSpec, check_box, eval_report
from .harness import (
    MAX_LAGUERRE_DEGREE,
    check_grid,
    convergence_slopes,
    doubling_grid,
    errtable_rows,
    laguerre_check,
)

EXIT_OK, EXIT_USAGE, EXIT_IDENTITY = 0, 2, 3
CSV_HEADER = "# kummer-asym errtable v1"
CSV_COLUMNS = ["family", "N", "u", "b", "z", "rel_error", "digits_correct"]

# Slater's published table gives 1/216 here; the recursion gives 1/1296
SLATER_B1_Z9_PUBLISHED = Fraction(1, 216)


class UsageError(Exception):
    pass


def default_digits() -> int:
    env = os.environ.get("KUMMER_ASYM_DIGITS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"KUMMER_ASYM_DIGITS must be an integer, got {env!r}")
    return 100


def sci(x, digits: int = 20) -> str:
    """Scientific notation with ``digits`` significant digits."""
    with mpmath.mp.workdps(max(digits + 5, 30)):
        text = mpmath.nstr(to_mpf(x), digits + 5, strip_zeros=False)
    return format(Decimal(text), f".{digits - 1}e")


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse number list {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}")


def _families(text: str) -> list[ExpansionFamily]:
    if text.strip() == "all":
        return list(ExpansionFamily)
    out = []
    for name in text.split(","):
        name = name.strip()
        try:
            out.append(ExpansionFamily.parse(name))
        except ValueError:
            continue
    if not out:
        raise UsageError(f"no known family in {text!r}")
    return out


def _u_grid(args) -> list[float]:
    if args.u_grid:
        grid = _float_list(args.u_grid)
    elif args.u_start is not None:
        grid = doubling_grid(args.u_start, args.doublings)
    else:
        grid = [20.0, 40.0, 80.0]
    check_grid(grid)
    for u in grid:
        check_box(u, args.b, args.z)
    return grid


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _poly_json(p) -> dict:
    return {
        "text": str(p),
        "terms": [[i, j, str(c)] for (i, j), c in p.sorted_terms()],
    }


# ---------------------------------------------------------------------------
# commands

_FAMILY_GEN = {
    "c": coef.gen_c,
    "alphabeta": coef.gen_alpha_beta,
    "two-bessel": coef.gen_two_bessel,
    "slater": coef.gen_slater_AB,
    "d": coef.gen_gamma_ratio_d,
}


def slater_b1_note(table) -> str | None:
    if table.order < 2:
        return None
    got = table.entries[1][1].coeff(0, 9)
    if got == SLATER_B1_Z9_PUBLISHED:
        return None
    return (
        f"note: z^9 coefficient of B_1 computed as {got}; "
        f"Slater's published table prints {SLATER_B1_Z9_PUBLISHED}"
    )


def cmd_coeffs(args) -> int:
    names = list(_FAMILY_GEN) if args.family == "all" else [args.family]
    tables = {name: _FAMILY_GEN[name](args.depth) for name in names}
    if args.format == "json":
        payload = {}
        for name, t in tables.items():
            rows = []
            for i, e in enumerate(t.entries):
                parts = e if t.family.is_pair else (e,)
                for pname, p in zip(t.family.part_names, parts):
                    rows.append({"index": i, "name": f"{pname}_{i}", **_poly_json(p)})
            entry = {"family": t.family.name, "provenance": t.provenance.value, "entries": rows}
            if name == "slater":
                entry["integration_constants"] = [str(k) for k in t.constants]
                entry["note"] = slater_b1_note(t)
            payload[name] = entry
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK
    buf = io.StringIO()
    for name, t in tables.items():
        buf.write(f"[{t.family.name}] depth {t.order}\n")
        for i, e in enumerate(t.entries):
            parts = e if t.family.is_pair else (e,)
            for pname, p in zip(t.family.part_names, parts):
                buf.write(f"  {pname}_{i} = {p}\n")
        if name == "slater":
            for s, k in enumerate(t.constants):
                buf.write(f"  K_{s} = {k}\n")
            note = slater_b1_note(t)
            if note:
                buf.write(f"  * {note}\n")
        buf.write("\n")
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def audit(depth: int) -> dict:
    slater = coef.gen_slater_AB(depth)
    two = coef.gen_two_bessel(depth)
    cmp_report = coef.compare_tables(slater, two)
    product = coef.series_product_identity(depth)
    return {
        "comparison": cmp_report,
        "product": product,
        "d": coef.gen_gamma_ratio_d(depth),
        "note": slater_b1_note(slater),
    }


def cmd_audit(args) -> int:
    if args.depth < 1:
        raise UsageError("depth must be >= 1")
    res = audit(args.depth)
    cmp_report, product = res["comparison"], res["product"]
    if args.format == "json":
        payload = {
            "depth": args.depth,
            "slater_vs_two_bessel": [
                {"index": r.index, "part": r.part, "verdict": r.verdict.value, "difference": str(r.difference)}
                for r in cmp_report.rows
            ],
            "product_identity": [
                {"index": r.index, "part": r.part, "verdict": r.verdict.value, "difference": str(r.difference)}
                for r in product.rows
            ],
            "product_identity_holds": product.all_match,
            "note": res["note"],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        buf = io.StringIO()
        buf.write("(i) Slater A_s, B_s minus two-Bessel a_n, b_n\n")
        for r in cmp_report.rows:
            buf.write(f"  {r.part}[{r.index}]  {r.verdict.value:8s}  diff = {r.difference}\n")
        d = res["d"]
        for r in cmp_report.mismatches():
            if r.part == "A" and r.index < d.order and r.difference == d.entries[r.index]:
                buf.write(f"  A[{r.index}] - a[{r.index}] equals d_{r.index} of the gamma-ratio expansion\n")
        buf.write("\n(ii) product identity A_s = sum_{j+n=s} d_j a_n, B_s = sum d_j b_n\n")
        for r in product.rows:
            buf.write(f"  {r.part}[{r.index}]  {r.verdict.value}\n")
        buf.write(f"  holds at all audited indices: {'yes' if product.all_match else 'NO'}\n")
        if res["note"]:
            buf.write(f"\n(iii) {res['note']}\n")
        _emit(buf.getvalue(), args.out)
    return EXIT_OK if product.all_match else EXIT_IDENTITY


def _truncation_for(fam: ExpansionFamily, args) -> int:
    if fam.uses_K:
        return args.K if args.K else 2 * args.N
    return args.N


def cmd_eval(args) -> int:
    check_box(args.u, args.b, args.z)
    fams = _families(args.families)
    reports = []
    for fam in fams:
        spec = ExpansionSpec(fam, _truncation_for(fam, args), args.u, args.b, args.z, args.digits)
        reports.append(eval_report(spec))
    if args.format == "json":
        payload = [
            {
                "family": r.family.value,
                "truncation": r.truncation,
                "u": r.u,
                "b": r.b,
                "z": r.z,
                "approx": sci(r.approx, 30),
                "oracle": sci(r.oracle, 30),
                "rel_error": sci(r.rel_error, 6),
                "digits_correct": round(r.digits_correct, 2),
            }
            for r in reports
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "truncation", "approx", "oracle", "rel_error", "digits_correct"])
        for r in reports:
            w.writerow([r.family.value, r.truncation, sci(r.approx), sci(r.oracle), sci(r.rel_error), f"{r.digits_correct:.2f}"])
        _emit(buf.getvalue(), args.out)
        return EXIT_OK
    buf = io.StringIO()
    buf.write(f"u = {args.u}, b = {args.b}, z = {args.z}, digits = {args.digits}\n")
    buf.write(f"{'family':20s} {'trunc':>5s}  {'approx':>28s}  {'oracle':>28s}  {'rel_error':>10s}  digits\n")
    for r in reports:
        buf.write(
            f"{r.family.value:20s} {r.truncation:5d}  {sci(r.approx, 20):>28s}  {sci(r.oracle, 20):>28s}"
            f"  {sci(r.rel_error, 3):>10s}  {r.digits_correct:6.2f}\n"
        )
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def render_errtable_csv(rows) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([r.family, r.truncation, sci(r.u), sci(r.b), sci(r.z), sci(r.rel_error), sci(r.digits_correct)])
    return buf.getvalue()


def cmd_errtable(args) -> int:
    grid = _u_grid(args)
    fams = _families(args.families)
    rows = errtable_rows(fams, _int_list(args.N_list), grid, args.b, args.z, args.digits)
    _emit(render_errtable_csv(rows), args.out)
    return EXIT_OK


def cmd_convergence(args) -> int:
    grid = _u_grid(args)
    fams = _families(args.families)
    fits = convergence_slopes(fams, _int_list(args.N_list), grid, args.b, args.z, args.digits)
    payload = {
        "b": args.b,
        "z": args.z,
        "digits": args.digits,
        "fits": [
            {
                "family": f.family,
                "truncation": f.truncation,
                "u": list(f.u),
                "rel_errors": [sci(e) for e in f.rel_errors],
                "slope": round(f.slope, 4),
            }
            for f in fits
        ],
    }
    if args.format == "text":
        buf = io.StringIO()
        for f in fits:
            buf.write(f"{f.family:20s} trunc={f.truncation}  slope={f.slope:+.3f}\n")
        _emit(buf.getvalue(), args.out)
    else:
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_laguerre_check(args) -> int:
    degrees = _int_list(args.n)
    if not degrees:
        raise UsageError("no degrees given")
    if not -4 <= args.alpha + 1 <= 4:
        raise DomainError("alpha + 1 must lie in [-4, 4]")
    check_box(10.0, args.alpha + 1, args.z)
    rows = laguerre_check(degrees, args.alpha, args.z, args.N, args.digits)
    if args.format == "json":
        payload = [
            {
                "n": r.n,
                "u": sci(r.u),
                "expansion": sci(r.expansion, 30),
                "laguerre": sci(r.laguerre, 30),
                "kummer_series": sci(r.kummer_series, 30),
                "rel_error": sci(r.rel_error, 6),
                "digits_correct": round(r.digits_correct, 2),
            }
            for r in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return EXIT_OK
    buf = io.StringIO()
    buf.write(f"L_n^({args.alpha})(-z^2), z = {args.z}, N = {args.N}\n")
    buf.write(f"{'n':>4s} {'u':>10s}  {'laguerre':>28s}  {'expansion':>28s}  digits\n")
    for r in rows:
        buf.write(
            f"{r.n:4d} {float(r.u):10.4f}  {sci(r.laguerre, 20):>28s}  {sci(r.expansion, 20):>28s}"
            f"  {r.digits_correct:6.2f}\n"
        )
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    digits = default_digits()
    p = argparse.ArgumentParser(prog="kummer-asym", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default="text", formats=("text", "csv", "json")):
        sp.add_argument("--digits", type=int, default=digits, help="working precision in decimal digits")
        sp.add_argument("--format", choices=formats, default=fmt_default)
        sp.add_argument("--out", default=None, help="write output here instead of stdout")

    def point(sp):
        sp.add_argument("--b", type=float, default=0.3)
        sp.add_argument("--z", type=float, default=1.5)

    def grid(sp):
        sp.add_argument("--u-grid", default=None, help="comma-separated u values")
        sp.add_argument("--u-start", type=float, default=None, help="first u of a doubling grid")
        sp.add_argument("--doublings", type=int, default=3, help="number of points in the doubling grid")
        sp.add_argument("--families", default="u_two_bessel")
        sp.add_argument("--N", dest="N_list", default="3", help="comma-separated truncations")

    sp = sub.add_parser("coeffs", help="print exact coefficient tables")
    sp.add_argument("--family", choices=["all", *_FAMILY_GEN], default="all")
    sp.add_argument("--depth", type=int, default=coef.DEFAULT_DEPTH)
    common(sp, formats=("text", "json"))
    sp.set_defaults(func=cmd_coeffs)

    sp = sub.add_parser("audit", help="compare Slater's coefficients with the two-Bessel ones")
    sp.add_argument("--depth", type=int, default=3)
    common(sp, formats=("text", "json"))
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("eval", help="evaluate expansions at one point against the oracle")
    sp.add_argument("--u", type=float, required=True)
    point(sp)
    sp.add_argument("--families", default="all")
    sp.add_argument("--N", type=int, default=3)
    sp.add_argument("--K", type=int, default=None, help="terms for Bessel-series families (default 2N)")
    common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("errtable", help="relative errors over a u grid, as CSV")
    point(sp)
    grid(sp)
    common(sp, fmt_default="csv", formats=("csv",))
    sp.set_defaults(func=cmd_errtable)

    sp = sub.add_parser("convergence", help="fitted log-log error slopes")
    point(sp)
    grid(sp)
    common(sp, fmt_default="json", formats=("json", "text"))
    sp.set_defaults(func=cmd_convergence)

    sp = sub.add_parser("laguerre-check", help="negative-a expansion against Laguerre polynomials")
    sp.add_argument("--n", default="30,60,120", help=f"comma-separated degrees (<= {MAX_LAGUERRE_DEGREE})")
    sp.add_argument("--alpha", type=float, default=0.5)
    sp.add_argument("--z", type=float, default=1.5)
    sp.add_argument("--N", type=int, default=3)
    common(sp, formats=("text", "json"))
    sp.set_defaults(func=cmd_laguerre_check)
    return p


def main(argv=None) -> int:
    try:
        parser = build_parser()
    except UsageError as exc:
        print(f"kummer-asym: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if getattr(args, "digits", 100) < 50:
            raise UsageError("--digits must be at least 50")
        if isinstance(getattr(args, "N", None), int) and args.N < 1:
            raise UsageError("--N must be >= 1")
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"kummer-asym: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KummerAsymError as exc:
        print(f"kummer-asym: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
