"""Certified quadrature for the hyperbolic-trigonometric integrals.

Non-oscillatory integrals on [0, oo) are split at a cut: tanh-sinh on
[0, cut] (itself subdivided), plus a closed exponential majorant for the tail.
Integrals with a sin(n x) factor are summed segment by segment between the
zeros of the sine; once the envelope is provably decreasing the segment values
alternate and shrink, so the next segment bounds the remainder.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from . import jacobi
from .closedform import series_identity_prefactors
from .elliptic import modular_point
from .hypseries import SeriesSpec, hyper_sum
from .mpcore import DomainError, Real, to_real, working_context
from .tanhsinh import tanh_sinh

__all__ = [
    "QuadResult",
    "IntegrandError",
    "integrate_mixed",
    "integrate_BI",
    "ramanujan_sine",
    "bernoulli",
    "pan_wang",
    "pan_wang_closed",
    "pan_wang_vanishing",
    "kuznetsov_check",
    "bradshaw_vignat_check",
    "IdentityCheck",
    "verify_thm31",
    "Thm31Check",
]


class IntegrandError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuadResult:
    value: Real
    tail_bound: Real
    cut: Real
    nodes: int
    quad_error: Real = 0
    segments: tuple = field(default=(), repr=False)

    @property
    def error_bound(self) -> Real:
        return self.tail_bound + self.quad_error


DEFAULT_CUT = 40


def _breakpoints(cut) -> list:
    pts = [0, 2, 5, 10, 15, 20, 30, 40, 60, 80, 120, 160, 240, 320]
    out = [p for p in pts if p < cut]
    return out + [cut]


def _integrate_finite(ctx, f, pts, tol):
    total = ctx.zero
    err = ctx.zero
    nodes = 0
    per = tol / max(1, len(pts) - 1)
    for a, b in zip(pts, pts[1:]):
        r = tanh_sinh(f, a, b, ctx.dps, per)
        total += r.value
        err += r.error
        nodes += r.nodes
    return total, err, nodes


def _exp_tail(ctx, M, power, rate, c):
    """Bound on int_c^oo M x^power e^(-rate x) dx, valid when rate*c > power."""
    if power <= 0:
        return M * ctx.exp(-rate * c) / rate * (c ** power if power else 1)
    slope = rate - power / c
    if slope <= 0:
        return ctx.inf
    return M * c ** power * ctx.exp(-rate * c) / slope


def _integrate_to_infinity(ctx, prec, f, tail_of_cut, cut=None, fixed_cut=False) -> QuadResult:
    """Integrate on [0, cut] and bound the rest; the cut doubles until the bound
    is below 10^-(prec+2) unless ``fixed_cut`` is set."""
    eps = ctx.mpf(10) ** (-prec - 2)
    c = ctx.mpf(DEFAULT_CUT if cut is None else cut)
    if not fixed_cut:
        while tail_of_cut(c) >= eps:
            c *= 2
            if c > 1e6:
                raise DomainError("could not find a cut with a small enough tail")
    tail = tail_of_cut(c)
    value, err, nodes = _integrate_finite(ctx, f, _breakpoints(c), eps)
    return QuadResult(value, tail, c, nodes, err)


def integrate_mixed(s, prec: int, cut=None, fixed_cut: bool = False) -> QuadResult:
    """int_0^oo x^s / ([cosh 2x - cos 2x][cosh x - cos x]) dx for s >= 4."""
    ctx = working_context(prec)
    s = to_real(ctx, s)
    if s < 4:
        raise DomainError("the mixed integral diverges at 0 unless s >= 4")

    def f(x):
        if x == 0:
            return ctx.mpf(1) / 4 if s == 4 else ctx.zero
        # cosh 2x - cos 2x = 2(sinh^2 x + sin^2 x), cosh x - cos x = 2(sinh^2 x/2 + sin^2 x/2)
        a = ctx.sinh(x) ** 2 + ctx.sin(x) ** 2
        h = x / 2
        b = ctx.sinh(h) ** 2 + ctx.sin(h) ** 2
        return x ** s / (4 * a * b)

    # for x >= 4 the denominator exceeds e^(3x)/5
    tail = lambda c: _exp_tail(ctx, 5, s, 3, max(c, ctx.mpf(4)))
    return _integrate_to_infinity(ctx, prec, f, tail, cut, fixed_cut)


def integrate_BI(sign: str, s, m: int, prec: int, cut=None, fixed_cut: bool = False) -> QuadResult:
    """int_0^oo x^(s-1) / (cos x +- cosh x)^m dx."""
    if sign not in ("+", "-"):
        raise DomainError("sign is '+' or '-'")
    if m < 1:
        raise DomainError("m must be a positive integer")
    ctx = working_context(prec)
    s = to_real(ctx, s)
    if sign == "+" and s < 1:
        raise DomainError("the '+' integral needs s >= 1")
    if sign == "-" and s < 2 * m + 1:
        raise DomainError("the '-' integral needs s >= 2m + 1")

    def f(x):
        h = x / 2
        if sign == "+":
            d = 2 * (ctx.cos(h) ** 2 + ctx.sinh(h) ** 2)
        else:
            d = -2 * (ctx.sin(h) ** 2 + ctx.sinh(h) ** 2)
        if d == 0:
            if x == 0 and s == 2 * m + 1:
                return ctx.mpf((-1) ** m)
            if x == 0:
                return ctx.zero
            raise IntegrandError("denominator vanished")
        return x ** (s - 1) / d ** m

    def tail(c):
        c = max(c, ctx.mpf(2))
        M = (2 / (1 - 2 * ctx.exp(-c))) ** m
        return _exp_tail(ctx, M, s - 1, m, c)

    return _integrate_to_infinity(ctx, prec, f, tail, cut, fixed_cut)


def _segmented_sine(ctx, prec, g, n, mono_from, max_segments=100000) -> QuadResult:
    """int_0^oo g(x) sin(n x) dx with g of one sign and |g| decreasing on [mono_from, oo)."""
    eps = ctx.mpf(10) ** (-prec - 2)
    step = ctx.pi / n
    f = lambda x: g(x) * ctx.sin(n * x)
    total = ctx.zero
    qerr = ctx.zero
    nodes = 0
    segs = []
    k = 0
    while True:
        a, b = k * step, (k + 1) * step
        r = tanh_sinh(f, a, b, ctx.dps, eps / 100)
        segs.append(r.value)
        total += r.value
        qerr += r.error
        nodes += r.nodes
        k += 1
        if a >= mono_from and abs(r.value) < eps:
            # the next segment is smaller in modulus than this one and bounds the rest
            return QuadResult(total, abs(r.value), b, nodes, qerr, tuple(segs))
        if k > max_segments:
            raise DomainError("oscillatory integral did not converge")


def ramanujan_sine(n: int, prec: int) -> QuadResult:
    """int_0^oo sin(n x) / (x (cos x + cosh x)) dx."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    ctx = working_context(prec)

    def g(x):
        h = x / 2
        return 1 / (2 * x * (ctx.cos(h) ** 2 + ctx.sinh(h) ** 2))

    # x (cos x + cosh x) has derivative cos x + cosh x + x (sinh x - sin x) > 0
    return _segmented_sine(ctx, prec, g, n, 0)


def bernoulli(n: int) -> Fraction:
    """B_n from x e^x / (e^x - 1) = sum B_n x^n / n!, so B_1 = +1/2."""
    if n < 0:
        raise DomainError("n must be non-negative")
    B = [Fraction(1)]
    for k in range(1, n + 1):
        # sum_{j<=k} C(k+1, j) B_j^- = 0 gives the B_1 = -1/2 sequence
        B.append(-sum((comb(k + 1, j) * B[j] for j in range(k)), Fraction(0)) / (k + 1))
    return -B[1] if n == 1 else B[n]


def _sine_over_cos_minus_cosh(ctx, prec, b: int, n: int) -> QuadResult:
    def g(x):
        h = x / 2
        return x ** b / (-2 * (ctx.sin(h) ** 2 + ctx.sinh(h) ** 2))

    # d/dx log|g| = b/x - (sinh x + sin x)/(cosh x - cos x) < 1/2 - 1/2 for x >= max(2, 2b)
    return _segmented_sine(ctx, prec, g, n, max(2, 2 * b))


def pan_wang(p: int, prec: int) -> QuadResult:
    """int_0^oo x^(4p+1) sin x / (cos x - cosh x) dx."""
    if p < 0:
        raise DomainError("p must be non-negative")
    return _sine_over_cos_minus_cosh(working_context(prec), prec, 4 * p + 1, 1)


def pan_wang_closed(p: int, prec: int) -> Real:
    """(-1)^(p+1) 2^(2p) pi^(4p+2) B_(4p+2) / (2p+1)."""
    ctx = working_context(prec)
    return (-1) ** (p + 1) * ctx.mpf(2) ** (2 * p) * ctx.pi ** (4 * p + 2) * to_real(ctx, bernoulli(4 * p + 2)) / (2 * p + 1)


def pan_wang_vanishing(b: int, n: int, prec: int) -> QuadResult:
    """int_0^oo x^b sin(n x) / (cos x - cosh x) dx for b = 3 (mod 4)."""
    if b < 3 or b % 4 != 3:
        raise DomainError("b must be = -1 (mod 4) and positive")
    if n < 1:
        raise DomainError("n must be a positive integer")
    return _sine_over_cos_minus_cosh(working_context(prec), prec, b, n)


@dataclass(frozen=True)
class IdentityCheck:
    integral: Real  # integral over the whole real t-line
    rhs: Real
    residual: Real


def _two_half_lines(ctx, prec, power, den_pos, den_neg, rate_pos, rate_neg, sign_neg):
    """int_0^oo 2 v^power / den_pos(v) dv + sign_neg int_0^oo 2 v^power / den_neg(v) dv."""

    def make(den):
        def f(v):
            d = den(v)
            if d == 0:
                if v == 0:
                    return ctx.zero
                raise IntegrandError("denominator vanished on the integration path")
            return 2 * v ** power / d
        return f

    def tail(rate):
        def t(c):
            c = max(c, 2 / rate)
            M = 4 / (1 - 2 * ctx.exp(-rate * c))
            return _exp_tail(ctx, M, power, rate, c)
        return t

    r1 = _integrate_to_infinity(ctx, prec, make(den_pos), tail(rate_pos))
    r2 = _integrate_to_infinity(ctx, prec, make(den_neg), tail(rate_neg))
    return r1.value + sign_neg * r2.value


def kuznetsov_check(n: int, x, prec: int) -> IdentityCheck:
    """int over R of t^n / (cos K sqrt t + cosh K' sqrt t) against 2 (-1)^n (sn/cd)^(2n+1)(0).

    ``residual`` is |integral/2 - (-1)^n d^(2n+1)/du^(2n+1) sn/cd at 0|.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    xf = Fraction(x)
    ctx = working_context(prec)
    pt = modular_point(xf, ctx.dps)
    K, Kc = ctx.mpf(pt.K), ctx.mpf(pt.Kc)
    # positive t = v^2 and negative t = -v^2, with stable positive denominators
    pos = lambda v: 2 * (ctx.cos(K * v / 2) ** 2 + ctx.sinh(Kc * v / 2) ** 2)
    neg = lambda v: 2 * (ctx.sinh(K * v / 2) ** 2 + ctx.cos(Kc * v / 2) ** 2)
    total = _two_half_lines(ctx, prec, 2 * n + 1, pos, neg, Kc, K, (-1) ** n)
    d = to_real(ctx, jacobi.deriv_at_zero("sn/cd", 2 * n + 1, xf))
    rhs = (-1) ** n * d
    return IdentityCheck(total, 2 * rhs, abs(total / 2 - rhs))


def bradshaw_vignat_check(n: int, x, prec: int) -> IdentityCheck:
    """int over R of t^(n+1) / (cos K sqrt t - cosh K' sqrt t) against
    (-1)^(n+1) 8 d^(2n+1)/du^(2n+1) [sn^2 / (cd^2 sd(2u))] at 0."""
    if n < 0:
        raise DomainError("n must be non-negative")
    xf = Fraction(x)
    ctx = working_context(prec)
    pt = modular_point(xf, ctx.dps)
    K, Kc = ctx.mpf(pt.K), ctx.mpf(pt.Kc)
    pos = lambda v: -2 * (ctx.sin(K * v / 2) ** 2 + ctx.sinh(Kc * v / 2) ** 2)
    neg = lambda v: 2 * (ctx.sinh(K * v / 2) ** 2 + ctx.sin(Kc * v / 2) ** 2)
    total = _two_half_lines(ctx, prec, 2 * n + 3, pos, neg, Kc, K, (-1) ** (n + 1))
    d = to_real(ctx, jacobi.deriv_at_zero("sn2/(cd2*sd(2u))", 2 * n + 1, xf))
    rhs = (-1) ** (n + 1) * 8 * d
    return IdentityCheck(total, rhs, abs(total - rhs))


# ---------------------------------------------------------------------------
# the mixed integral against four hyperbolic series at y = pi


@dataclass(frozen=True)
class Thm31Check:
    residual: Real
    variant: str | None  # prefactor form that verified, None if none did
    residuals: dict


THM31_VARIANTS = ("stated", "minus_i", "conjugate", "minus_i_conjugate")


def _thm31_prefactors(p: int, variant: str):
    # i -> -i in front of the first series and/or (1+i) -> (1-i) throughout
    i_sign = -1 if variant in ("minus_i", "minus_i_conjugate") else 1
    conj = variant in ("conjugate", "minus_i_conjugate")
    return series_identity_prefactors(p, i_sign=i_sign, conjugate=conj)


def verify_thm31(p: int, prec: int, tolerance=None) -> Thm31Check:
    """2 * mixed integral of x^p against the four-series combination at y = pi, p = 1 (mod 4)."""
    if p < 5 or p % 4 != 1:
        raise DomainError("p must satisfy p = 1 (mod 4), p >= 5")
    ctx = working_context(prec)
    sp = prec + 10
    integral = ctx.mpf(integrate_mixed(p, sp).value)
    pi = ctx.pi
    H = lambda fam, q, m: ctx.mpf(hyper_sum(SeriesSpec(fam, q, m), pi, sp))
    cbar, c, x3, cs = H("Cbar", p, 2), H("C", p, 2), H("X", p, 3), H("Cswap", p - 1, 2)
    tol = ctx.mpf(10) ** (-(prec // 2)) if tolerance is None else tolerance
    residuals = {}
    for v in THM31_VARIANTS:
        cb, r, lhs = _thm31_prefactors(p, v)
        rhs = (to_real(ctx, cb) * pi ** (p + 1) * (-cbar) - to_real(ctx, r) / 4 * pi ** (p + 1) * c
               - to_real(ctx, r) / 2 * pi ** (p + 1) * x3 + p * to_real(ctx, r) / 4 * pi ** p * cs)
        residuals[v] = abs(to_real(ctx, lhs) * integral - rhs)
        if v == "stated" and residuals[v] < tol:
            return Thm31Check(residuals[v], "stated", residuals)
    ok = [v for v in THM31_VARIANTS if residuals[v] < tol]
    return Thm31Check(residuals["stated"], ok[0] if ok else None, residuals)
