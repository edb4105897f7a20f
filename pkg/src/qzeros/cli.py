"""Command-line interface: build, analyze, verify, sweep.

Rationals cross this boundary as exact "p/q" strings; decimals appear only
as display approximations, always next to a rational error bound.  Exit
status: 0 success (and all checks passed), 1 at least one Fail or Error,
2 usage or configuration problem.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .analysis import interlace, lmesh
from .errors import QZerosError
from .families import Family, FamilyParams, build
from .qcore import as_q, rat, rat_str
from .roots import DEFAULT_EPS, RootSet, isolate_real_roots

_FAMILY_NAMES = {f.value: f for f in Family}


def _parse_rat(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise QZerosError(f"malformed rational {text!r} (expected p or p/q)") from exc


def decimal_str(x: Fraction, digits: int = 30) -> str:
    """Exact decimal expansion of x truncated to ``digits`` fractional digits."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole = x.numerator // x.denominator
    frac = x - whole
    out = []
    for _ in range(digits):
        if frac == 0:
            break
        frac *= 10
        d = frac.numerator // frac.denominator
        out.append(str(d))
        frac -= d
    return f"{sign}{whole}." + "".join(out) if out else f"{sign}{whole}"


def sci_str(x: Fraction) -> str:
    """Short scientific rendering of a nonnegative rational bound."""
    if x == 0:
        return "0"
    exp = 0
    v = x
    while v < 1:
        v *= 10
        exp -= 1
    while v >= 10:
        v /= 10
        exp += 1
    mant = (v * 100).numerator // (v * 100).denominator  # mantissa in [1, 10)
    return f"{mant / 100:.2f}e{exp:+03d}".replace(".00e", "e")


def _family_params(args, suffix: str = "") -> FamilyParams:
    name = getattr(args, "family" + suffix)
    fam = _FAMILY_NAMES.get(name)
    if fam is None:
        raise QZerosError(f"unknown family {name!r}; choose from {sorted(_FAMILY_NAMES)}")
    q = as_q(_parse_rat(args.q))

    def opt(attr):
        value = getattr(args, attr + suffix, None)
        return None if value is None else _parse_rat(value)

    n = getattr(args, "n" + suffix)
    k = getattr(args, "k" + suffix, None)
    return FamilyParams(family=fam, n=n, q=q, a=opt("a"), b=opt("b"), k=k)


def _root_json(rs: RootSet) -> dict:
    roots = []
    for e in rs.roots:
        mid = (e.lo + e.hi) / 2
        roots.append(
            {
                "interval": [rat_str(e.lo), rat_str(e.hi)],
                "multiplicity": e.multiplicity,
                "exact": None if e.exact is None else rat_str(e.exact),
                "approx": decimal_str(mid, 32),
                "errorBound": sci_str(e.width / 2),
            }
        )
    return {
        "roots": roots,
        "totalCount": rs.total_count,
        "certifiedRealRooted": rs.certified_real_rooted,
    }


def _cmd_coeffs(args) -> int:
    poly = build(_family_params(args))
    print(", ".join(rat_str(c) for c in poly.coeffs))
    return 0


def _cmd_roots(args) -> int:
    poly = build(_family_params(args))
    eps = _parse_rat(args.eps) if args.eps else DEFAULT_EPS
    rs = isolate_real_roots(poly, eps)
    print(json.dumps(_root_json(rs), indent=2))
    return 0


def _cmd_lmesh(args) -> int:
    params = _family_params(args)
    poly = build(params)
    rs = isolate_real_roots(poly)
    base = _parse_rat(args.base) if args.base else params.q
    result = lmesh(rs, base)
    cmp_word = {-1: "below", 0: "equal", 1: "above"}[result.compare_to_q()]
    print(
        json.dumps(
            {
                "valueLo": rat_str(result.value_lo),
                "valueHi": rat_str(result.value_hi),
                "approx": decimal_str((result.value_lo + result.value_hi) / 2, 20),
                "argmaxIndex": result.argmax_index,
                "exactEqualsBase": result.exact_equals_q,
                "base": rat_str(base),
                "comparison": cmp_word,
            },
            indent=2,
        )
    )
    return 0


def _cmd_interlace(args) -> int:
    rs1 = isolate_real_roots(build(_family_params(args)))
    rs2 = isolate_real_roots(build(_family_params(args, suffix="2")))
    report = interlace(rs1, rs2)
    print(
        json.dumps(
            {
                "relation": report.relation.value,
                "degreePattern": None
                if report.degree_pattern is None
                else report.degree_pattern.value,
                "witness": report.witness,
            },
            indent=2,
        )
    )
    return 0


def _cmd_verify(args) -> int:
    with open(args.config, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise QZerosError(f"config is not valid JSON: {exc}") from exc
    grid = verify_mod.GridSpec.from_json(doc)
    records = verify_mod.run_checks(grid)
    summary = verify_mod.summarize(records)
    report = {"records": [r.to_json() for r in records], "summary": summary}
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
    else:
        json.dump(report, sys.stdout, indent=2)
        print()
    print(
        f"total={summary['total']} pass={summary['pass']} fail={summary['fail']} "
        f"skipped={summary['skipped']} error={summary['error']}",
        file=sys.stderr,
    )
    return 1 if summary["fail"] or summary["error"] else 0


def _cmd_sweep(args) -> int:
    if args.values:
        values = [_parse_rat(v) for v in args.values.split(",")]
    elif args.start is not None and args.stop is not None and args.steps:
        lo, hi = _parse_rat(args.start), _parse_rat(args.stop)
        steps = args.steps
        values = [lo + (hi - lo) * Fraction(i, steps - 1) for i in range(steps)] if steps > 1 else [lo]
    else:
        raise QZerosError("sweep needs --values or --start/--stop/--steps")
    if args.vary not in ("a", "b"):
        raise QZerosError("--vary must be a or b")

    rows = []
    width = 0
    for v in values:
        setattr(args, args.vary, rat_str(v))
        poly = build(_family_params(args))
        rs = isolate_real_roots(poly)
        cells = [rat_str(v)]
        for e in rs.lambdas():
            mid = (e.lo + e.hi) / 2
            cells.append(f"{decimal_str(mid, 30)}±{sci_str(e.width / 2)}")
        width = max(width, len(cells) - 1)
        rows.append(cells)

    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow([args.vary] + [f"lambda_{k+1}" for k in range(width)])
        for cells in rows:
            writer.writerow(cells + [""] * (width - (len(cells) - 1)))
    finally:
        if args.out:
            out.close()
    return 0


def _cmd_table1(args) -> int:
    rows = [int(r) for r in args.rows.split(",")] if args.rows else list(range(1, 11))
    for r in rows:
        if r not in verify_mod.TABLE1_ROWS:
            raise QZerosError(f"table rows are 1..10, got {r}")
    q_values = (
        [as_q(_parse_rat(v)) for v in args.q.split(",")]
        if args.q
        else [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    )
    n_values = [int(v) for v in args.n.split(",")] if args.n else [2, 3, 4, 5]
    grid = verify_mod.GridSpec(q_values=q_values, n_values=n_values)
    failed = False
    for r in rows:
        check_id = f"table1-row-{r}"
        records = verify_mod.check_property(check_id, grid)
        if args.samples:
            records = records[: args.samples]
        summary = verify_mod.summarize(records)
        print(
            f"{check_id}: pass={summary['pass']} fail={summary['fail']} "
            f"skipped={summary['skipped']} error={summary['error']}"
        )
        failed = failed or summary["fail"] or summary["error"]
    return 1 if failed else 0


def _add_family_args(sub, suffix: str = ""):
    sub.add_argument("--family" + suffix, required=True, help="family name, e.g. little-q-jacobi")
    sub.add_argument("--n" + suffix, type=int, required=True)
    sub.add_argument("--a" + suffix)
    sub.add_argument("--b" + suffix)
    sub.add_argument("--k" + suffix, type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qzeros",
        description="Exact q-hypergeometric polynomial families with certified zero analysis",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("coeffs", help="print exact coefficients, constant term first")
    _add_family_args(p)
    p.add_argument("--q", required=True)
    p.set_defaults(fn=_cmd_coeffs)

    p = subs.add_parser("roots", help="certified real-root isolation (JSON)")
    _add_family_args(p)
    p.add_argument("--q", required=True)
    p.add_argument("--eps", help="isolation interval width, rational (default 2^-100)")
    p.set_defaults(fn=_cmd_roots)

    p = subs.add_parser("lmesh", help="logarithmic-mesh enclosure and comparison (JSON)")
    _add_family_args(p)
    p.add_argument("--q", required=True)
    p.add_argument("--base", help="compare lmesh against this rational (default: q)")
    p.set_defaults(fn=_cmd_lmesh)

    p = subs.add_parser("interlace", help="interlacing relation of two family polynomials (JSON)")
    _add_family_args(p)
    _add_family_args(p, suffix="2")
    p.add_argument("--q", required=True, help="shared base q")
    p.set_defaults(fn=_cmd_interlace)

    p = subs.add_parser("verify", help="run a check grid from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--report", help="write the JSON report here (default: stdout)")
    p.set_defaults(fn=_cmd_verify)

    p = subs.add_parser("sweep", help="trace each zero against one varying parameter (CSV)")
    _add_family_args(p)
    p.add_argument("--q", required=True)
    p.add_argument("--vary", required=True, help="a or b")
    p.add_argument("--values", help="comma-separated rationals")
    p.add_argument("--start")
    p.add_argument("--stop")
    p.add_argument("--steps", type=int)
    p.add_argument("--out", help="CSV file (default: stdout)")
    p.set_defaults(fn=_cmd_sweep)

    p = subs.add_parser("table1", help="run the root-location table rows")
    p.add_argument("--rows", help="comma-separated row numbers 1..10 (default: all)")
    p.add_argument("--samples", type=int, help="cap the number of samples per row")
    p.add_argument("--q", help="comma-separated q values (default: 1/4,1/2,3/4)")
    p.add_argument("--n", help="comma-separated degrees (default: 2,3,4,5)")
    p.set_defaults(fn=_cmd_table1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except QZerosError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
