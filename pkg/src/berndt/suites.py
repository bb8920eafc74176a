"""Fixed verification grids run by ``berndt verify``.

Every check is a named, picklable record: a function key in ``CHECKS``, its
arguments, and a tolerance 10^-(a*prec + b) (or None for exact checks that
return (ok, note)). Keys sort into a deterministic report order.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from . import barnes, closedform, elliptic, hypseries, jacobi, quad, reference
from .mpcore import agm, expr_eval, gamma_quarter, to_real, working_context

SUITES = ("core", "thm31", "thm32", "thm33", "thm4", "thm6", "barnes", "historical")


@dataclass(frozen=True)
class Check:
    key: str
    fn: str
    args: tuple = ()
    tol: tuple | None = (Fraction(1, 2), 0)  # (a, b): tolerance 10^-(a*prec + b)

    def tolerance(self, prec: int):
        if self.tol is None:
            return None
        a, b = self.tol
        return mpmath.mpf(10) ** (-(int(a * prec) + b))


@dataclass(frozen=True)
class Outcome:
    key: str
    passed: bool
    residual: str
    tolerance: str
    note: str
    seconds: float


# ---------------------------------------------------------------------------
# check bodies: (prec, *args) -> residual, or (ok, note) for exact checks


def _agm_value(prec):
    ctx = working_context(prec)
    return abs(agm(1, ctx.sqrt(2), prec) - ctx.agm(1, ctx.sqrt(2)))


def _gamma_quarter(prec):
    ctx = working_context(prec)
    return abs(gamma_quarter(prec) - ctx.gamma(ctx.mpf(1) / 4))


def _legendre(prec, x):
    ctx = working_context(prec)
    pt = elliptic.modular_point(x, prec)
    return abs(pt.E * pt.Kc + pt.Ec * pt.K - pt.K * pt.Kc - ctx.pi / 2)


def _involution(prec, x):
    ctx = working_context(prec)
    y1 = elliptic.modular_point(x, prec).y
    y2 = elliptic.modular_point(1 - Fraction(x), prec).y
    return abs(y1 * y2 - ctx.pi ** 2)


def _hypergeometric_K(prec, x):
    ctx = working_context(prec)
    return abs(ctx.pi / 2 * elliptic.hyp2f1("1/2", "1/2", 1, x, prec) - elliptic.ellK(x, prec))


def _series_identity(prec, which, order):
    t = jacobi.jacobi_series(order)
    one = jacobi.SeriesU((jacobi.PolyQ([1]),) + (jacobi.PolyQ(),) * order, order, "even")
    if which == "sn2+cn2":
        lhs = t["sn"] * t["sn"] + t["cn"] * t["cn"]
    else:
        lhs = t["dn"] * t["dn"] + t["sn"] * t["sn"] * jacobi.PolyQ([0, 1])
    return lhs.coeffs == one.coeffs, f"exact through u^{order}"


def _thm31(prec, p):
    return quad.verify_thm31(p, prec).residual


def _theta(prec, ident, a, b, theta):
    return hypseries.verify_theta_identity(ident, a, b, theta, prec)


def _transform(prec, ident, p, y):
    return hypseries.verify_transform(ident, p, y, prec)


def _block(prec, block, p, x):
    return closedform.building_block_check(block, p, x, prec)


def _thm4(prec, which, p, x):
    return closedform.verify_thm4_general_x(which, p, x, prec).residual


def _thm4_printed(prec, which, p, x):
    return closedform.verify_thm4_general_x(which, p, x, prec).example_residual


def _lemniscatic(prec, target, m):
    ctx = working_context(prec)
    s = hypseries.hyper_sum(closedform.target_series(target, m), ctx.pi, prec)
    return abs(s - expr_eval(closedform.closed_series_half(target, m), prec))


def _golden_lemniscatic(prec, target, m):
    got = closedform.closed_series_half(target, m)
    return got == reference.load_golden(target, m), str(got)


def _golden_mixed(prec, m):
    got = closedform.berndt_closed_form(m)
    return got == reference.load_golden("mixed", m), str(got)


def _coeffs(prec, m):
    got = closedform.berndt_coeffs(m).as_tuple()
    want = reference.MIXED_INTEGRAL_COEFFS[m]
    bad = [f"q{i + 1}: {g} vs {w}" for i, (g, w) in enumerate(zip(got, want)) if g != w]
    return not bad, "; ".join(bad) or "q1..q5 equal"


def _two_routes(prec, m):
    a = closedform.berndt_via_series_identity(m)
    return a == closedform.berndt_closed_form(m), "table assembly vs lemniscatic-sum assembly"


def _mixed_integral(prec, m):
    r = quad.integrate_mixed(4 * m - 3, prec)
    return abs(r.value - expr_eval(closedform.berndt_closed_form(m), prec))


def _thm72(prec, m):
    return barnes.verify_thm72(m, prec)


def _barnes_printed(prec, m):
    got = closedform.berndt_closed_form(m).scale(Fraction(1, 4 * factorial(4 * m - 3)))
    want = reference.barnes_c4(m)
    if got == want:
        return True, "exact"
    diff = [f"{w.coeff} printed vs {g.coeff}" for g, w in zip(got.terms, want.terms) if g != w]
    return False, "; ".join(diff)


def _barnes_routes(prec, m, budget):
    p = barnes.c4_params(m)
    lat = barnes.barnes_zeta(p, min(prec, 30), max_terms=budget)
    lap = barnes.barnes_via_laplace(p, prec)
    gap = abs(lat.value - lap.value)
    ok = gap <= lat.error_bound + lap.error_bound
    return bool(ok), f"|lattice - laplace| = {mpmath.nstr(gap, 3)}, lattice bound {mpmath.nstr(lat.error_bound, 3)}"


def _bi_relation(prec, sign, s, m):
    return barnes.verify_bi_relation(sign, s, m, prec)


def _ramanujan(prec, n):
    ctx = working_context(prec)
    return abs(quad.ramanujan_sine(n, prec).value - ctx.pi / 4)


def _pan_wang(prec, p):
    return abs(quad.pan_wang(p, prec).value - quad.pan_wang_closed(p, prec))


def _pan_wang_vanishing(prec, b, n):
    return abs(quad.pan_wang_vanishing(b, n, prec).value)


def _kuznetsov(prec, n, x):
    return quad.kuznetsov_check(n, x, prec).residual


def _bradshaw_vignat(prec, n, x):
    return quad.bradshaw_vignat_check(n, x, prec).residual


CHECKS = {f.__name__.lstrip("_"): f for f in (
    _agm_value, _gamma_quarter, _legendre, _involution, _hypergeometric_K, _series_identity,
    _thm31, _theta, _transform, _block, _thm4, _thm4_printed, _lemniscatic,
    _golden_lemniscatic, _golden_mixed, _coeffs, _two_routes, _mixed_integral,
    _thm72, _barnes_printed, _barnes_routes, _bi_relation,
    _ramanujan, _pan_wang, _pan_wang_vanishing, _kuznetsov, _bradshaw_vignat,
)}

# ---------------------------------------------------------------------------
# grids

GRID_X = ("1/10", "1/5", "3/10", "2/5", "1/2", "3/5", "7/10", "4/5", "9/10")
THETA_AB = ((1, 1), (1, 2), (2, 3))
THETA_T = ("0", "1/2", "1")
TRANSFORM_P = (5, 7, 9)
TRANSFORM_Y = ("2", "pi", "5")
BLOCK_X = ("3/10", "1/2", "7/10")
TWO_THIRDS = (Fraction(2, 3), 0)
TIGHT = (Fraction(1), -10)  # P - G digits


def suite_checks(suite: str) -> list[Check]:
    if suite == "all":
        return [c for s in SUITES for c in suite_checks(s)]
    out: list[Check] = []
    add = out.append
    if suite == "core":
        add(Check("core/agm", "agm_value", (), TIGHT))
        add(Check("core/gamma_quarter", "gamma_quarter", (), TIGHT))
        for x in GRID_X:
            add(Check(f"core/legendre/x={x}", "legendre", (x,), TIGHT))
            add(Check(f"core/involution/x={x}", "involution", (x,), TIGHT))
        add(Check("core/2F1/x=3/10", "hypergeometric_K", ("3/10",), TIGHT))
        for which in ("sn2+cn2", "dn2+x*sn2"):
            add(Check(f"core/series/{which}", "series_identity", (which, 30), None))
    elif suite == "thm31":
        for p in (5, 9, 13):
            add(Check(f"thm31/p={p:02d}", "thm31", (p,)))
    elif suite == "thm32":
        for ident in hypseries.THETA_IDS:
            for a, b in THETA_AB:
                for th in THETA_T:
                    add(Check(f"thm32/{ident}/a={a},b={b},theta={th}", "theta", (ident, a, b, th), TWO_THIRDS))
    elif suite == "thm33":
        for ident in hypseries.TRANSFORM_IDS:
            for p in TRANSFORM_P:
                for y in TRANSFORM_Y:
                    add(Check(f"thm33/{ident}/p={p},y={y}", "transform", (ident, p, y),
                              (Fraction(7, 12), 0)))
    elif suite == "thm4":
        for block in closedform.BLOCKS:
            for p in (5, 9):
                for x in BLOCK_X:
                    add(Check(f"thm4/block/{block}/p={p:02d},x={x}", "block", (block, p, x), TWO_THIRDS))
        for which in closedform.THM4_SERIES:
            for p in (5, 9, 13):
                for x in BLOCK_X:
                    add(Check(f"thm4/general/{which}/p={p:02d},x={x}", "thm4", (which, p, x), TWO_THIRDS))
                    add(Check(f"thm4/printed/{which}/p={p:02d},x={x}", "thm4_printed", (which, p, x),
                              TWO_THIRDS))
        for target in closedform.TARGETS:
            for m in (2, 3, 4):
                add(Check(f"thm4/lemniscatic/{target}/m={m}", "lemniscatic", (target, m), TWO_THIRDS))
    elif suite == "thm6":
        for m in (2, 3, 4):
            add(Check(f"thm6/coeffs/m={m}", "coeffs", (m,), None))
            add(Check(f"thm6/golden/mixed/m={m}", "golden_mixed", (m,), None))
            add(Check(f"thm6/two_routes/m={m}", "two_routes", (m,), None))
            for target in ("C", "Cprime", "Cbar"):
                add(Check(f"thm6/golden/{target}/m={m}", "golden_lemniscatic", (target, m), None))
        add(Check("thm6/integral/m=2", "mixed_integral", (2,)))
        add(Check("thm6/integral/m=3", "mixed_integral", (3,)))
        add(Check("thm6/integral/m=4", "mixed_integral", (4,), (Fraction(5, 12), 0)))
    elif suite == "barnes":
        for m in (2, 3):
            add(Check(f"barnes/bridge/m={m}", "thm72", (m,), (Fraction(5, 8), 0)))
        for m in (2, 3, 4):
            add(Check(f"barnes/printed/m={m}", "barnes_printed", (m,), None))
        add(Check("barnes/routes/m=2", "barnes_routes", (2, 1500), None))
        add(Check("barnes/BI/-,s=5,m=2", "bi_relation", ("-", 5, 2), (Fraction(5, 8), 0)))
        add(Check("barnes/BI/+,s=3,m=2", "bi_relation", ("+", 3, 2), (Fraction(5, 8), 0)))
    elif suite == "historical":
        low = (Fraction(1, 3), 0)
        for n in (1, 2, 3):
            add(Check(f"historical/ramanujan/n={n}", "ramanujan", (n,), low))
        add(Check("historical/pan_wang/p=0", "pan_wang", (0,), low))
        add(Check("historical/pan_wang/p=1", "pan_wang", (1,), low))
        add(Check("historical/pan_wang_vanishing/b=3,n=1", "pan_wang_vanishing", (3, 1), low))
        for x in ("3/10", "1/2"):
            for n in (0, 1, 2):
                add(Check(f"historical/kuznetsov/n={n},x={x}", "kuznetsov", (n, x), low))
                add(Check(f"historical/bradshaw_vignat/n={n},x={x}", "bradshaw_vignat", (n, x), low))
    else:
        raise KeyError(suite)
    return out


def run_check(check: Check, prec: int) -> Outcome:
    t0 = time.perf_counter()
    fn = CHECKS[check.fn]
    try:
        res = fn(prec, *check.args)
    except Exception as exc:  # reported, never swallowed silently
        return Outcome(check.key, False, "error", "-", f"{type(exc).__name__}: {exc}", time.perf_counter() - t0)
    dt = time.perf_counter() - t0
    if check.tol is None:
        ok, note = res
        return Outcome(check.key, bool(ok), "exact" if ok else "mismatch", "exact", note, dt)
    tol = check.tolerance(prec)
    if res is None:
        return Outcome(check.key, True, "n/a", mpmath.nstr(tol, 1), "no printed display", dt)
    res = abs(res)
    return Outcome(check.key, bool(res < tol), mpmath.nstr(res, 3), mpmath.nstr(tol, 1), "", dt)
