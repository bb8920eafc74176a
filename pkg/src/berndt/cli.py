"""Command-line front end.

    berndt closed-form --m 2 --json
    berndt series --family C --p 5 --m 2 --y pi --digits 40
    berndt verify --suite thm32 --prec 60
    berndt integral --s 5
    berndt barnes --m 2

Exit codes: 0 success, 1 verification failure, 2 bad arguments.
BERNDT_PREC overrides the default precision of 60 digits.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from decimal import ROUND_DOWN, Decimal, localcontext
from math import factorial

import mpmath

from . import __version__
from .barnes import c4_params, barnes_via_laplace, verify_thm72
from .closedform import berndt_closed_form
from .hypseries import FAMILIES, SeriesSpec, hyper_sum_detailed
from .mpcore import DomainError, expr_eval, to_real, working_context
from .quad import integrate_BI, integrate_mixed
from .suites import SUITES, run_check, suite_checks

DEFAULT_PREC = 60


class UsageError(Exception):
    pass


def _digits(v, n: int) -> str:
    """v truncated (not rounded) to n significant digits, so more precision only appends digits."""
    if v == 0:
        return "0"
    d = Decimal(mpmath.nstr(v, n + 10, strip_zeros=False, min_fixed=1, max_fixed=0))
    with localcontext() as c:
        c.prec = n
        c.rounding = ROUND_DOWN
        return str(+d)


def _sci(v) -> str:
    return mpmath.nstr(v, 3, min_fixed=1, max_fixed=0)


def _positive(text: str):
    v = to_real(working_context(30), text)
    if not v > 0:
        raise UsageError(f"y must be positive, got {text}")
    return text


def cmd_closed_form(args) -> tuple[int, list[str]]:
    if args.m < 2:
        raise UsageError("closed forms exist for m > 1 only (m >= 2)")
    e = berndt_closed_form(args.m)
    lines = [f"m = {args.m}", f"closed form: {e}",
             f"value: {_digits(expr_eval(e, args.prec), args.prec)}"]
    if args.json:
        lines = [e.to_json()]
    return 0, lines


def cmd_series(args) -> tuple[int, list[str]]:
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    _positive(args.y)
    try:
        spec = SeriesSpec(args.family, args.p, args.m)
        ctx = working_context(args.digits)
        r = hyper_sum_detailed(spec, to_real(ctx, args.y), args.digits)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    return 0, [f"series {args.family}(p={args.p}, m={args.m}) at y = {args.y}",
               f"value: {_digits(r.value, args.digits)}",
               f"terms: {r.terms}", f"tail bound: {_sci(r.tail_bound)}"]


def cmd_integral(args) -> tuple[int, list[str]]:
    try:
        if args.sign is None:
            r = integrate_mixed(args.s, args.prec)
            name = f"int_0^oo x^{args.s} / ((cosh 2x - cos 2x)(cosh x - cos x)) dx"
        else:
            r = integrate_BI(args.sign, args.s, args.order, args.prec)
            name = f"int_0^oo x^({args.s}-1) / (cos x {args.sign} cosh x)^{args.order} dx"
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    return 0, [name, f"value: {_digits(r.value, args.prec)}", f"cut: {_sci(r.cut)}",
               f"tail bound: {_sci(r.tail_bound)}", f"quadrature error: {_sci(r.quad_error)}"]


def cmd_barnes(args) -> tuple[int, list[str]]:
    if args.m < 2:
        raise UsageError("m must be at least 2")
    z = barnes_via_laplace(c4_params(args.m), args.prec)
    res = verify_thm72(args.m, args.prec)
    closed = expr_eval(berndt_closed_form(args.m), args.prec) / (4 * factorial(4 * args.m - 3))
    tol = mpmath.mpf(10) ** (-(5 * args.prec // 8))
    ok = res < tol
    return (0 if ok else 1), [
        f"zeta_4({4 * args.m - 2}, 3 | 2+2i, 2-2i, 1+i, 1-i)",
        f"value: {_digits(z.value, args.prec)}",
        f"error bound: {_sci(z.error_bound)}",
        f"closed form / (4 ({4 * args.m - 3})!): {_digits(closed, args.prec)}",
        f"bridge residual: {_sci(res)} (tolerance {_sci(tol)}) {'PASS' if ok else 'FAIL'}",
    ]


def cmd_verify(args) -> tuple[int, list[str]]:
    checks = sorted(suite_checks(args.suite), key=lambda c: c.key)
    t0 = time.perf_counter()
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            outcomes = list(pool.map(run_check, checks, [args.prec] * len(checks)))
    else:
        outcomes = [run_check(c, args.prec) for c in checks]
    failed = [o for o in outcomes if not o.passed]
    if args.json:
        doc = {"command": f"verify --suite {args.suite}", "precision": args.prec, "version": __version__,
               "results": [{"key": o.key, "passed": o.passed, "residual": o.residual,
                            "tolerance": o.tolerance, "note": o.note,
                            **({"seconds": round(o.seconds, 3)} if args.timings else {})}
                           for o in outcomes],
               "passed": len(outcomes) - len(failed), "failed": len(failed)}
        return (1 if failed else 0), [json.dumps(doc, indent=1)]
    lines = [f"# berndt {__version__} verify --suite {args.suite} --prec {args.prec}",
             "# tolerance per check is listed; exact checks compare rationals structurally"]
    for o in outcomes:
        t = f"  [{o.seconds:.2f}s]" if args.timings else ""
        note = f"  {o.note}" if (o.note and not o.passed) else ""
        lines.append(f"{'PASS' if o.passed else 'FAIL'} {o.key}  residual={o.residual}  tol={o.tolerance}{t}{note}")
    lines.append(f"# {len(outcomes) - len(failed)} passed, {len(failed)} failed")
    if args.timings:
        lines.append(f"# wall time {time.perf_counter() - t0:.1f}s")
    return (1 if failed else 0), lines


def build_parser() -> argparse.ArgumentParser:
    env = os.environ.get("BERNDT_PREC")
    default_prec = int(env) if env and env.isdigit() else DEFAULT_PREC
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=default_prec, help="decimal digits (default %(default)s)")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    ap = argparse.ArgumentParser(prog="berndt", description="Certified evaluation and verification")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closed-form", parents=[common], help="exact closed form of the mixed integral")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_closed_form)

    p = sub.add_parser("series", parents=[common], help="certified hyperbolic series value")
    p.add_argument("--family", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--y", default="pi")
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="add wall times (output no longer byte-stable)")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("integral", parents=[common], help="mixed or Berndt-type integral")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--sign", choices=("+", "-"), default=None)
    p.add_argument("--order", type=int, default=1)
    p.set_defaults(run=cmd_integral)

    p = sub.add_parser("barnes", parents=[common], help="zeta_4 value and the integral bridge")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(run=cmd_barnes)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "digits", 0) is None:
        args.digits = args.prec
    if args.prec < 10:
        ap.error("--prec must be at least 10")
    try:
        code, lines = args.run(args)
    except UsageError as exc:
        print(f"berndt: error: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
