"""Command line front end.

    aw <command> [--a R] [--b R] [--c R] [--d R] (--u R | --q R)
                 [--n N | --n LO..HI] [--x F] [--backend exact|float]
                 [--precision BITS] [--tolerance F] [--format csv|json]
                 [--seed N] [--check NAME]

Commands: eval, zeros, bounds, table1, verify, limits.
Exit codes: 0 success / all checks PASS, 1 a verification FAILed,
2 usage error.  Machine-readable payload goes to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import families, operators, structure, zeros
from .scalars import QContext, UsageError, parse_rational
from .sympoly import XPoly, f_basis

DEFAULT_PRECISION_ENV = "AW_PRECISION"

VERIFY_CHECKS = ("product-rules", "dde", "structure", "contiguous",
                 "expansion", "koornwinder", "band", "shift")


class _CliError(Exception):
    pass


def _fmt(v, digits=12):
    if isinstance(v, Fraction):
        v = float(v)
    return f"%.{digits}g" % float(v)


def _parse_scalar(text: str, backend: str):
    text = text.strip()
    try:
        if backend == "exact":
            return parse_rational(text)
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliError(f"bad numeric value {text!r}: {exc}")


def _parse_n(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if not 0 <= lo <= hi <= 32:
        raise _CliError("n range must satisfy 0 <= lo <= hi <= 32")
    return lo, hi


def _build_context(args):
    if (args.u is None) == (args.q is None):
        raise _CliError("supply exactly one of --u or --q")
    backend = args.backend
    if args.u is not None:
        u = _parse_scalar(args.u, backend)
        return QContext(u=u)
    qv = parse_rational(args.q) if "/" in args.q or backend == "exact" else None
    if backend == "exact":
        ctx = QContext(q=qv)
        if not ctx.exact:
            raise _CliError(
                "exact backend with --q needs q^(1/2) rational; supply --u instead")
        return ctx
    return QContext(q=_parse_scalar(args.q, backend))


def _build_params(args, ctx):
    vals = []
    for name in "abcd":
        raw = getattr(args, name)
        if raw is None:
            raise _CliError(f"--{name} is required for this command")
        vals.append(_parse_scalar(raw, args.backend))
    return families.AWParams(*vals, ctx)


def _emit(payload, fmt, digits=12):
    if fmt == "json":
        print(json.dumps(payload, indent=2))
        return
    rows = payload["rows"]
    if rows:
        header = list(rows[0].keys())
        print(",".join(header))
        for row in rows:
            print(",".join(str(row[h]) for h in header))


def _row(values: dict, digits=12):
    return {k: (_fmt(v, digits) if isinstance(v, (int, float, Fraction)) and not isinstance(v, bool) else v)
            for k, v in values.items()}


def cmd_eval(args, ctx):
    params = _build_params(args, ctx)
    if args.x is None:
        raise _CliError("eval needs --x")
    x0 = _parse_scalar(args.x, args.backend)
    lo, hi = _parse_n(args.n)
    rows = []
    for n in range(lo, hi + 1):
        p = families.aw_monic(params, n)
        rows.append(_row({"n": n, "x": _fmt(x0), "P_n": p(x0)}))
    return rows, "ok"


def cmd_zeros(args, ctx):
    params = _build_params(args, ctx)
    lo, hi = _parse_n(args.n)
    rc = families.extract_recurrence(params, max(hi, 1))
    rows = []
    for n in range(max(lo, 1), hi + 1):
        zs = zeros.zeros_sturm(rc, n, tol=args.tolerance, precision=args.precision)
        for i, z in enumerate(zs.values, start=1):
            rows.append(_row({"n": n, "rank": i, "zero": z}))
    return rows, "ok"


def cmd_bounds(args, ctx):
    params = _build_params(args, ctx)
    lo, hi = _parse_n(args.n)
    rows = []
    for n in range(max(lo, 2), hi + 1):
        bp = zeros.extreme_zero_bounds(params, n, precision=args.precision or 53)
        rows.append(_row({"n": n,
                          "upper_on_smallest": bp.upper_on_smallest,
                          "lower_on_largest": bp.lower_on_largest}))
    return rows, "ok"


def cmd_table1(args, _ctx):
    precision = args.precision or 128
    rows_by_n = zeros.table1(precision=precision)
    rows = []
    for n, (zmin, ub, lb, zmax) in rows_by_n.items():
        rows.append({"n": n,
                     "smallest_zero": _fmt(zmin, 9),
                     "upper_bound": _fmt(ub, 9),
                     "lower_bound": _fmt(lb, 9),
                     "largest_zero": _fmt(zmax, 9)})
    return rows, "ok"


def _residual_norm(r: XPoly):
    return max((abs(float(c)) for c in r.coeffs), default=0.0)


def cmd_verify(args, ctx):
    check = args.check
    if check not in VERIFY_CHECKS:
        raise _CliError(f"--check must be one of {', '.join(VERIFY_CHECKS)}")
    lo, hi = _parse_n(args.n) if args.n else (0, 8)
    rows = []
    ok = True

    def record(case, residual):
        nonlocal ok
        norm = _residual_norm(residual)
        passed = residual.is_zero
        ok = ok and passed
        rows.append({"case": case, "status": "PASS" if passed else "FAIL",
                     "residual_norm": _fmt(norm)})

    if check == "product-rules":
        rng = random.Random(args.seed)
        for i in range(20):
            f = XPoly([Fraction(rng.randint(-6, 6), rng.randint(1, 5))
                       for _ in range(rng.randint(1, 7))])
            g = XPoly([Fraction(rng.randint(-6, 6), rng.randint(1, 5))
                       for _ in range(rng.randint(1, 7))])
            for kind in operators.IDENTITY_KINDS:
                gg = g if kind.startswith("product") else None
                record(f"{kind}[{i}]", operators.verify_identity(ctx, kind, f, gg))
        for k in range(1, 11):
            r = operators.dq(ctx, f_basis(ctx, k)) - ctx.gamma(k) * f_basis(ctx, k - 1)
            record(f"f-basis[k={k}]", r)
        return rows, ("pass" if ok else "fail")

    params = _build_params(args, ctx)
    if check == "dde":
        for n in range(lo, hi + 1):
            record(f"dde[n={n}]", structure.verify_dde(params, n))
    elif check == "structure":
        for n in range(max(lo, 2), hi + 1):
            record(f"structure[n={n}]", structure.verify_structure_relation(params, n))
    elif check == "contiguous":
        for n in range(lo, hi + 1):
            for slot in "abcd":
                record(f"contiguous[{slot},n={n}]",
                       structure.verify_contiguous(params, n, slot))
    elif check == "expansion":
        for n in range(max(lo, 4), hi + 1):
            coeffs = structure.expand_in_d2_basis(params, n)
            bad = XPoly([c for k, c in coeffs.items() if 2 <= k < n - 2])
            record(f"expansion[n={n}]", bad)
    elif check == "koornwinder":
        for n in range(lo, hi + 1):
            record(f"koornwinder[n={n}]", structure.verify_koornwinder(params, n))
    elif check == "band":
        pi, _ = structure.pi_poly(params)
        family = [families.aw_monic(params, k) for k in range(hi + 3)]
        for n in range(max(lo, 2), hi + 1):
            profile = structure.band_profile(family, pi, n, ctx)
            bad = XPoly(profile[:max(n - 2, 0)])
            record(f"band[n={n}]", bad)
    elif check == "shift":
        shifted = params.shifted_sqrt_q()
        for n in range(max(lo, 1), hi + 1):
            r = (operators.dq(ctx, families.aw_monic(params, n))
                 - ctx.gamma(n) * families.aw_monic(shifted, n - 1))
            record(f"shift[n={n}]", r)
    return rows, ("pass" if ok else "fail")


def cmd_limits(args, ctx):
    kind_map = {"i": ("continuous-dual-q-Hahn", 3), "ii": ("Al-Salam-Chihara", 2),
                "iii": ("continuous-big-q-Hermite", 1), "iv": ("continuous-q-Hermite", 0)}
    case = args.case or "i"
    if case not in kind_map:
        raise _CliError("--case must be one of i, ii, iii, iv")
    kind, nsurvive = kind_map[case]
    surviving = []
    for name in "abc"[:nsurvive]:
        raw = getattr(args, name)
        if raw is None:
            raise _CliError(f"--{name} is required for limit case {case}")
        surviving.append(float(Fraction(raw)))
    lo, hi = _parse_n(args.n) if args.n else (3, 3)
    precision = args.precision or 53
    if precision > 53:
        import mpmath
        with mpmath.workprec(precision):
            ctx = QContext(q=mpmath.mpf(float(ctx.q)))
            surviving = [mpmath.mpf(v) for v in surviving]
            return _limits_rows(case, kind, surviving, ctx, lo, hi, 1e2)
    # all four parameters diverging cancels too hard for doubles at 1e4
    start = 1e1 if case == "iv" else 1e2
    return _limits_rows(case, kind, surviving, ctx, lo, hi, start)


def _limits_rows(case, kind, surviving, ctx, lo, hi, start):
    rows = []
    ok = True
    for n in range(lo, hi + 1):
        prev = None
        for decade in range(3):
            big = start * 10 ** decade
            _, dev = families.limit_family_eval(kind, surviving, ctx, n, big)
            rows.append(_row({"case": case, "n": n, "large_param": float(big),
                              "deviation": float(dev)}))
            if prev is not None and not dev < prev:
                ok = False
            prev = dev
    return rows, ("pass" if ok else "fail")


COMMANDS = {"eval": cmd_eval, "zeros": cmd_zeros, "bounds": cmd_bounds,
            "table1": cmd_table1, "verify": cmd_verify, "limits": cmd_limits}


def build_parser():
    parser = argparse.ArgumentParser(prog="aw", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--a")
    parser.add_argument("--b")
    parser.add_argument("--c")
    parser.add_argument("--d")
    parser.add_argument("--u")
    parser.add_argument("--q")
    parser.add_argument("--n")
    parser.add_argument("--x")
    parser.add_argument("--backend", choices=("exact", "float"))
    parser.add_argument("--precision", type=int)
    parser.add_argument("--tolerance", type=float, default=1e-12)
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--check")
    parser.add_argument("--case")
    return parser


def parse_and_dispatch(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.precision is None and os.environ.get(DEFAULT_PRECISION_ENV):
        try:
            args.precision = int(os.environ[DEFAULT_PRECISION_ENV])
        except ValueError:
            print(f"aw: bad {DEFAULT_PRECISION_ENV} value", file=sys.stderr)
            return 2
    if args.backend is None:
        raw = [v for v in (args.a, args.b, args.c, args.d, args.u, args.q) if v]
        args.backend = "exact" if all("/" in v or v.lstrip("-").isdigit()
                                      for v in raw) else "float"
    try:
        if args.command == "table1":
            ctx = None
        else:
            ctx = _build_context(args)
        rows, status = COMMANDS[args.command](args, ctx)
    except (_CliError, UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"aw: {exc}", file=sys.stderr)
        return 2
    payload = {"command": args.command,
               "config": {k: v for k, v in vars(args).items()
                          if k != "command" and v is not None},
               "rows": rows,
               "status": status}
    _emit(payload, args.format)
    return 0 if status in ("ok", "pass") else 1


def main():
    sys.exit(parse_and_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
