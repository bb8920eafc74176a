"""Certified sums of alternating hyperbolic series and two families of identities among them.

A family term has the shape

    (-1)^n k^e * h(u) / (sinh(u)^a cosh(u)^b),   u = k * lam * y,

with k = n or k = 2n - 1, lam = 1 or 1/2, and an optional numerator
h = cosh or sinh. Terms are evaluated through w = e^(-u) so that huge
arguments never form sinh/cosh explicitly, and the tail after N terms is
bounded by a geometric majorant M k^e e^(-beta lam y k).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .mpcore import DomainError, Real, to_real, working_context

__all__ = [
    "FAMILIES",
    "SeriesSpec",
    "SumResult",
    "hyper_sum",
    "hyper_sum_detailed",
    "certified_sum",
    "verify_theta_identity",
    "verify_transform",
    "transform_sides",
    "THETA_IDS",
    "TRANSFORM_IDS",
]


@dataclass(frozen=True)
class FamilyShape:
    odd_index: bool  # k = 2n - 1 with argument k y / 2
    power_shift: int  # exponent e = p + power_shift
    sinh_pow: str  # "m", "1" or "0": power of sinh in the denominator
    cosh_pow: str
    numerator: str | None  # None, "cosh" or "sinh"


FAMILIES: dict[str, FamilyShape] = {
    "C": FamilyShape(False, 0, "1", "m", None),
    "X": FamilyShape(False, 0, "m", "0", None),
    "DX": FamilyShape(False, 0, "m", "0", "cosh"),
    "Cprime": FamilyShape(True, -1, "1", "m", None),
    "Cbar": FamilyShape(True, 0, "m", "1", None),
    "T": FamilyShape(True, -1, "m", "0", None),
    "DT": FamilyShape(True, 0, "m", "0", "cosh"),
    "Xprime": FamilyShape(True, 0, "0", "m", None),
    "DXprime": FamilyShape(True, 1, "0", "m", "sinh"),
    "B": FamilyShape(False, -1, "0", "m", None),
    "DB": FamilyShape(False, 0, "0", "m", "sinh"),
    # (-1)^n n^p / (sinh^m(ny) cosh(ny)): C with the two powers swapped
    "Cswap": FamilyShape(False, 0, "m", "1", None),
}


@dataclass(frozen=True)
class SeriesSpec:
    family: str
    p: int
    m: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown series family {self.family!r}")
        if self.m < 1:
            raise DomainError("m must be a positive integer")

    @property
    def shape(self) -> FamilyShape:
        return FAMILIES[self.family]

    def powers(self) -> tuple[int, int, int]:
        """(sinh power, cosh power, numerator flag) with the numerator counted as -1 decay."""
        sh = self.shape
        pw = {"m": self.m, "1": 1, "0": 0}
        return pw[sh.sinh_pow], pw[sh.cosh_pow], 0 if sh.numerator is None else 1

    def decay(self) -> int:
        a, b, h = self.powers()
        return a + b - h


@dataclass(frozen=True)
class SumResult:
    value: Real
    terms: int
    tail_bound: Real


def certified_sum(ctx, term: Callable[[int], Real], bound_from: Callable[[int], Real], eps,
                  max_terms: int = 1_000_000, min_terms: int = 1) -> SumResult:
    """Sum term(1) + term(2) + ... until bound_from(N) (a bound on sum_{n>N}) is below eps."""
    total = ctx.zero
    n = 0
    while True:
        n += 1
        total += term(n)
        if n >= min_terms:
            b = bound_from(n)
            if b < eps:
                return SumResult(total, n, b)
        if n >= max_terms:
            raise DomainError("series did not reach its tolerance within the term budget")


def _geometric_tail(ctx, M, k1, d, e, rate):
    """Bound on sum over k = k1, k1+d, ... of M k^e exp(-rate k), or inf if not yet geometric."""
    ratio = ((k1 + d) / ctx.mpf(k1)) ** e * ctx.exp(-rate * d) if e > 0 else ctx.exp(-rate * d)
    if ratio >= 1:
        return ctx.inf
    return M * ctx.mpf(k1) ** e * ctx.exp(-rate * k1) / (1 - ratio)


def _family_sum(ctx, spec: SeriesSpec, y, eps, fixed_terms: int | None = None) -> SumResult:
    sh = spec.shape
    a, b, h = spec.powers()
    beta = a + b - h
    if beta <= 0:
        raise DomainError(f"{spec.family} with m = {spec.m} does not decay")
    e = spec.p + sh.power_shift
    lam = ctx.mpf(1) / 2 if sh.odd_index else ctx.one
    d = 2 if sh.odd_index else 1
    scale = lam * y

    def kk(n):
        return 2 * n - 1 if sh.odd_index else n

    def term(n):
        k = kk(n)
        u = k * scale
        w = ctx.exp(-u)
        one_minus = -ctx.expm1(-2 * u)  # 1 - w^2
        one_plus = 1 + w * w
        # (2w)^beta / ((1-w^2)^a (1+w^2)^b), times 1 +- w^2 for a cosh/sinh numerator
        v = (2 * w) ** beta
        if a:
            v /= one_minus ** a
        if b:
            v /= one_plus ** b
        if sh.numerator == "cosh":
            v *= one_plus
        elif sh.numerator == "sinh":
            v *= one_minus
        v *= ctx.mpf(k) ** e
        return -v if n % 2 else v

    def tail(N):
        k1 = kk(N + 1)
        u1 = k1 * scale
        M = ctx.mpf(2) ** beta
        if a:
            M /= (-ctx.expm1(-2 * u1)) ** a
        if sh.numerator == "cosh":
            M *= 2
        return _geometric_tail(ctx, M, k1, d, e, beta * scale)

    if fixed_terms is not None:
        total = ctx.zero
        for n in range(1, fixed_terms + 1):
            total += term(n)
        return SumResult(total, fixed_terms, tail(fixed_terms))
    return certified_sum(ctx, term, tail, eps)


def hyper_sum_detailed(spec: SeriesSpec, y, prec: int, terms: int | None = None) -> SumResult:
    """Like hyper_sum but also returns the term count and the certified tail bound.

    With ``terms`` given, exactly that many terms are summed and the bound
    refers to the remainder after them.
    """
    ctx = working_context(prec, 1000)
    y = to_real(ctx, y)
    if not y > 0:
        raise DomainError("y must be positive")
    return _family_sum(ctx, spec, y, ctx.mpf(10) ** (-prec - 2), terms)


def hyper_sum(spec: SeriesSpec, y, prec: int) -> Real:
    """Value of the series selected by ``spec`` at y > 0, error below 10^-prec."""
    return hyper_sum_detailed(spec, y, prec).value


# ---------------------------------------------------------------------------
# identities with a free angle theta


def _alt_sum(ctx, eps, term, k_of_n, d, rate, M):
    """Sum term(n), with |term(n)| <= M e^(-rate k(n)) for every n; k increases by d."""
    if rate <= 0:
        raise DomainError("series does not decay for these parameters")

    def tail(N):
        return _geometric_tail(ctx, M, k_of_n(N + 1), d, 0, rate)

    return certified_sum(ctx, term, tail, eps).value


THETA_IDS = ("CE", "CF", "CG")


def verify_theta_identity(ident: str, a, b, theta, prec: int) -> Real:
    """|left side| of one of three identities in (a, b, theta), |theta| < 3 b pi.

    The left sides combine sums over n of sinh(n theta/a)-, sin(n theta/b)- or
    cos-weighted hyperbolic terms at arguments b n pi/a and a n pi/b.
    """
    if ident not in THETA_IDS:
        raise DomainError(f"unknown identity {ident!r}")
    ctx = working_context(prec, 1000)
    a, b, t = (to_real(ctx, v) for v in (a, b, theta))
    if a == 0 or b == 0:
        raise DomainError("a and b must be non-zero")
    if not abs(t) < 3 * abs(b) * ctx.pi:
        raise DomainError("theta must satisfy |theta| < 3 b pi")
    if ident == "CE" and t == 0:
        return ctx.zero
    eps = ctx.mpf(10) ** (-prec - 4)
    pi = ctx.pi
    A, Bv, T = abs(a), abs(b), abs(t)
    u_ba = Bv * pi / A  # argument of the b/a hyperbolic terms per unit n
    u_ab = A * pi / Bv

    def sh_lb(u1):  # 1/|sinh u| <= 2 e^-u / (1 - e^(-2 u1)) for u >= u1
        return 2 / (-ctx.expm1(-2 * u1))

    n_id = lambda n: n
    odd = lambda n: 2 * n - 1
    sgn = lambda n: -1 if n % 2 else 1
    res = ctx.zero
    if ident == "CE":
        s1 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.sinh(n * t / a) / (ctx.sinh(b * n * pi / a) * ctx.cosh(b * n * pi / a) ** 2),
                      n_id, 1, 3 * u_ba - T / A, 8 * sh_lb(u_ba))
        s2 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.sin(n * t / b) / ctx.sinh(a * n * pi / b),
                      n_id, 1, u_ab, sh_lb(u_ab))
        s3 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.cos(odd(n) * t / (2 * b)) / ctx.sinh(odd(n) * a * pi / (2 * b)),
                      odd, 2, u_ab / 2, sh_lb(u_ab / 2))
        s4 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.sin(odd(n) * t / (2 * b)) * ctx.cosh(odd(n) * a * pi / (2 * b))
                      / ctx.sinh(odd(n) * a * pi / (2 * b)) ** 2,
                      odd, 2, u_ab / 2, 2 * sh_lb(u_ab / 2) ** 2)
        res = b * b * pi * s1 + a * b * pi * s2 - a * t * s3 + a * a * pi * s4 + t * b / 2
    elif ident == "CF":
        s1 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.cosh(odd(n) * t / (2 * a))
                      / (ctx.sinh(odd(n) * b * pi / (2 * a)) * ctx.cosh(odd(n) * b * pi / (2 * a)) ** 2),
                      odd, 2, (3 * u_ba - T / A) / 2, 8 * sh_lb(u_ba / 2))
        s2 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.sin(odd(n) * t / (2 * b)) / ctx.cosh(odd(n) * a * pi / (2 * b)),
                      odd, 2, u_ab / 2, 2)
        s3 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.cos(odd(n) * t / (2 * b)) * ctx.sinh(odd(n) * a * pi / (2 * b))
                      / ctx.cosh(odd(n) * a * pi / (2 * b)) ** 2,
                      odd, 2, u_ab / 2, 4)
        s4 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.cos(n * t / b) / ctx.cosh(a * n * pi / b),
                      n_id, 1, u_ab, 2)
        res = b * b * pi * s1 + a * t * s2 + a * a * pi * s3 + a * b * pi * s4 + a * b * pi / 2
    else:
        s1 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.cosh(n * t / a) / (ctx.sinh(n * b * pi / a) ** 2 * ctx.cosh(n * b * pi / a)),
                      n_id, 1, 3 * u_ba - T / A, 8 * sh_lb(u_ba) ** 2)
        s2 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.sin(n * t / b) / ctx.sinh(a * n * pi / b),
                      n_id, 1, u_ab, sh_lb(u_ab))
        s3 = _alt_sum(ctx, eps, lambda n: sgn(n) * ctx.cos(n * t / b) * ctx.cosh(a * n * pi / b) / ctx.sinh(a * n * pi / b) ** 2,
                      n_id, 1, u_ab, 2 * sh_lb(u_ab) ** 2)
        s4 = _alt_sum(ctx, eps, lambda n: -sgn(n) * ctx.cos(odd(n) * t / (2 * b)) / ctx.sinh(odd(n) * a * pi / (2 * b)),
                      odd, 2, u_ab / 2, sh_lb(u_ab / 2))
        res = (b * b * pi ** 2 * s1 + a * pi * t * s2 + a * a * pi ** 2 * s3 + a * b * pi ** 2 * s4
               + (a * a * pi ** 2 - 5 * b * b * pi ** 2 + 3 * t * t) / 12)
    return abs(res)


# ---------------------------------------------------------------------------
# transformations y -> pi^2/y for p odd

TRANSFORM_IDS = ("CBB", "CBC", "CBD")


def transform_sides(ident: str, p: int, y, prec: int) -> tuple[Real, Real]:
    """(left, right) of the transformation identity; the right side lives at pi^2/y."""
    if ident not in TRANSFORM_IDS:
        raise DomainError(f"unknown identity {ident!r}")
    if p < 5 or p % 2 == 0:
        raise DomainError("p must be an odd integer >= 5")
    ctx = working_context(prec + 10, 1000)
    y = to_real(ctx, y)
    if not y > 0:
        raise DomainError("y must be positive")
    sp = prec + 10
    pi = ctx.pi
    Y = pi * pi / y
    e = -1 if ((p - 1) // 2) % 2 else 1
    H = lambda fam, q, m, arg: ctx.mpf(hyper_sum(SeriesSpec(fam, q, m), arg, sp))
    if ident == "CBB":
        lhs = H("Cswap", p - 1, 2, y)
        w3 = -1 if ((p - 3) // 2) % 2 else 1
        rhs = (-(pi ** (p - 1)) / y ** p * (p - 1) * w3 * H("X", p - 2, 1, Y)
               + pi ** p / (2 ** (p - 1) * y ** p) * e * H("T", p, 1, Y)
               - (pi / y) ** (p + 1) * e * H("DX", p - 1, 2, Y))
    elif ident == "CBC":
        lhs = H("C", p, 2, y)
        rhs = (-(pi / y) ** (p + 1) * e * H("X", p, 1, Y)
               + p * pi ** p / (2 ** (p - 1) * y ** (p + 1)) * e * H("T", p, 1, Y)
               - pi ** (p + 2) / (2 ** p * y ** (p + 2)) * e * H("DT", p, 2, Y))
    else:
        lhs = H("Cbar", p, 2, y)
        rhs = (-(pi / y) ** (p + 1) * e * H("Xprime", p, 1, Y)
               - p * 2 ** p * pi ** p / y ** (p + 1) * e * H("B", p, 1, Y)
               + 2 ** p * pi ** (p + 2) / y ** (p + 2) * e * H("DB", p, 2, Y))
    return lhs, rhs


def verify_transform(ident: str, p: int, y, prec: int) -> Real:
    lhs, rhs = transform_sides(ident, p, y, prec)
    return abs(lhs - rhs)
