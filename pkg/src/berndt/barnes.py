"""Barnes multiple zeta functions, plain and alternating.

    zeta_N(s, w | a_1..a_N) = sum over n in N^N of sign(n) (w + n.a)^(-s)

Two independent routes. The lattice route enumerates the first N-1 indices
shell by shell and sums the last axis in closed form with the Hurwitz zeta
function, bounding every unvisited shell. The Laplace route integrates

    (1/Gamma(s)) int_0^oo u^(s-1) e^(-w u) prod 1/(1 - sign_j e^(-a_j u)) du.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .mpcore import DomainError, Real, to_real, working_context
from .quad import _exp_tail, _integrate_to_infinity, integrate_BI, integrate_mixed

__all__ = [
    "BarnesParams",
    "BarnesResult",
    "DivergenceError",
    "GeometryError",
    "barnes_zeta",
    "barnes_via_laplace",
    "c4_params",
    "bi_params",
    "bi_via_barnes",
    "verify_thm72",
    "verify_bi_relation",
]

DEFAULT_MAX_TERMS = 20000


class DivergenceError(DomainError):
    pass


class GeometryError(DomainError):
    pass


def _as_complex(v) -> complex:
    if isinstance(v, complex):
        return v
    if isinstance(v, (int, float, Fraction)):
        return complex(v)
    if isinstance(v, str):
        return complex(v) if "j" in v else complex(Fraction(v))
    if hasattr(v, "imag"):
        return complex(float(v.real), float(v.imag))
    return complex(v)


@dataclass(frozen=True)
class BarnesParams:
    """Parameters of zeta_N(s, omega | weights) with per-axis signs (+1 plain, -1 alternating).

    ``omega`` and the weights may be ints, Fractions or Python complex numbers;
    Gaussian-rational inputs are represented exactly enough as complex floats
    because only small integers occur in practice.
    """

    N: int
    s: object
    omega: object
    weights: tuple
    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "signs", tuple(self.signs))
        if self.N < 1 or len(self.weights) != self.N or len(self.signs) != self.N:
            raise DomainError("N must equal the number of weights and signs")
        if any(sg not in (1, -1) for sg in self.signs):
            raise DomainError("signs are +1 or -1")
        if _as_complex(self.omega).real <= 0:
            raise GeometryError("omega must have positive real part")
        if any(_as_complex(a).real <= 0 for a in self.weights):
            raise GeometryError("every weight needs a positive real part")

    @property
    def plain_count(self) -> int:
        return sum(1 for sg in self.signs if sg == 1)

    @property
    def min_re_s(self) -> int:
        """Re(s) must exceed this for the lattice sum to converge absolutely shell-wise."""
        if self.plain_count == 0:
            return self.N - 1
        return self.N

    def check_gate(self) -> None:
        if _as_complex(self.s).real <= self.min_re_s:
            raise DivergenceError(f"needs Re(s) > {self.min_re_s} for these signs")

    @property
    def conjugate_closed(self) -> bool:
        """True when omega is real and the signed weights are closed under conjugation."""
        if abs(_as_complex(self.omega).imag) > 0:
            return False
        pool = sorted((_as_complex(a).real, _as_complex(a).imag, sg) for a, sg in zip(self.weights, self.signs))
        conj = sorted((re, -im, sg) for re, im, sg in pool)
        return pool == conj


@dataclass(frozen=True)
class BarnesResult:
    value: object
    error_bound: Real
    shells: int
    certified: bool


def _mpc(ctx, v):
    if isinstance(v, complex):
        return ctx.mpc(v.real, v.imag)
    if isinstance(v, (int, Fraction, str)):
        return ctx.mpc(to_real(ctx, v))
    return ctx.mpc(v)


def _line_sum(ctx, s, c, a, sign):
    """sum_{n>=0} sign^n (c + a n)^(-s) via Hurwitz zeta, principal branch.

    (c + a n)^(-s) = a^(-s) (c/a + n)^(-s) holds on the principal branch
    whenever Re a > 0 and Re c > 0.
    """
    w = c / a
    if sign == 1:
        return a ** (-s) * ctx.zeta(s, w)
    if s == 1:
        return (ctx.digamma((w + 1) / 2) - ctx.digamma(w / 2)) / (2 * a)
    return (2 * a) ** (-s) * (ctx.zeta(s, w / 2) - ctx.zeta(s, (w + 1) / 2))


def _line_bound_terms(ctx, s, a, sign):
    """Bound on |_line_sum| as a list of (K, e) meaning sum K rho^(-e), rho <= Re c."""
    sig = ctx.re(s)
    alpha = ctx.re(a)
    if sign == 1:
        return [(ctx.one, sig), (1 / (alpha * (sig - 1)), sig - 1)]
    # pair consecutive terms: |f(2j) - f(2j+1)| <= int |f'|
    return [(abs(s) * abs(a) / (alpha * sig), sig)]


def _compositions(t: int, k: int):
    """All k-tuples of non-negative integers summing to t, in lexicographic order."""
    if k == 1:
        yield (t,)
        return
    for first in range(t, -1, -1):
        for rest in _compositions(t - first, k - 1):
            yield (first,) + rest


def _shell_tail(ctx, T, k, r0, mu, terms):
    """sum_{t>T} C(t+k-1, k-1) sum_i K_i (r0 + mu t)^(-e_i) for k outer axes."""
    explicit_end = 4 * T + 64
    total = ctx.zero
    for t in range(T + 1, explicit_end + 1):
        rho = r0 + mu * t
        total += comb(t + k - 1, k - 1) * sum(K * rho ** (-e) for K, e in terms)
    # beyond: C(t+k-1, k-1) <= (k t)^(k-1)/(k-1)! for t >= 1, and rho >= mu t
    t0 = ctx.mpf(explicit_end)
    lead = ctx.mpf(k) ** (k - 1) / factorial(k - 1)
    for K, e in terms:
        expo = e - (k - 1)
        if expo <= 1:
            return ctx.inf
        total += lead * K * mu ** (-e) * t0 ** (1 - expo) / (expo - 1)
    return total


def barnes_zeta(params: BarnesParams, prec: int, max_terms: int = DEFAULT_MAX_TERMS,
                shells: int | None = None) -> BarnesResult:
    """Direct lattice summation with a certified bound on the unsummed shells.

    Stops when the bound drops below 10^-prec (certified) or when the next shell
    would exceed ``max_terms`` Hurwitz evaluations (returned uncertified).
    With ``shells`` given, exactly that many shells are summed.
    """
    params.check_gate()
    ctx = working_context(prec, max_terms)
    s = to_real(ctx, params.s)
    omega = _mpc(ctx, params.omega)
    axes = list(zip((_mpc(ctx, a) for a in params.weights), params.signs))
    # last axis: an alternating one if available (tighter line bound), smallest real part
    last = min(range(len(axes)), key=lambda j: (axes[j][1] == 1, ctx.re(axes[j][0])))
    a_last, sign_last = axes.pop(last)
    eps = ctx.mpf(10) ** (-prec)

    if not axes:
        v = _line_sum(ctx, s, omega, a_last, sign_last)
        return BarnesResult(_finish(ctx, v, params), ctx.zero, 0, True)

    k = len(axes)
    r0 = ctx.re(omega)
    mu = min(ctx.re(a) for a, _ in axes)
    line_terms = _line_bound_terms(ctx, s, a_last, sign_last)
    total = ctx.mpc(0)
    used = 0
    t = 0
    while True:
        for n in _compositions(t, k):
            c = omega + sum((ni * a for ni, (a, _) in zip(n, axes)), ctx.mpc(0))
            neg = sum(ni for ni, (_, sg) in zip(n, axes) if sg == -1) % 2
            v = _line_sum(ctx, s, c, a_last, sign_last)
            total += -v if neg else v
        used += comb(t + k - 1, k - 1)
        tail = _shell_tail(ctx, t, k, r0, mu, line_terms)
        if shells is not None:
            if t + 1 >= shells:
                return BarnesResult(_finish(ctx, total, params), tail, t + 1, tail < eps)
        elif tail < eps:
            return BarnesResult(_finish(ctx, total, params), tail, t + 1, True)
        elif used + comb(t + k, k - 1) > max_terms:
            return BarnesResult(_finish(ctx, total, params), tail, t + 1, False)
        t += 1


def _finish(ctx, v, params):
    return ctx.re(v) if params.conjugate_closed else v


def barnes_via_laplace(params: BarnesParams, prec: int, cut=None) -> BarnesResult:
    """Quadrature of the Laplace-type integral representation.

    The integral only needs Re(s) above the number of plain axes (and above 0),
    which is weaker than the lattice gate when some axes alternate.
    """
    ctx = working_context(prec)
    s = to_real(ctx, params.s)
    if s <= max(params.plain_count, 0):
        raise DivergenceError("the integral diverges at 0 unless Re(s) exceeds the number of plain axes")
    omega = _mpc(ctx, params.omega)
    axes = [(_mpc(ctx, a), sg) for a, sg in zip(params.weights, params.signs)]
    real_only = params.conjugate_closed

    def f(u):
        if u == 0:
            return ctx.zero
        acc = ctx.exp(-omega * u) * u ** (s - 1)
        for a, sg in axes:
            e = -a * u
            acc /= -ctx.expm1(e) if sg == 1 else 1 + ctx.exp(e)
        return ctx.re(acc) if real_only else acc

    # for u >= c: |1 -+ e^(-a u)| >= 1 - e^(-Re(a) c)
    def tail(c):
        c = max(c, ctx.one)
        M = ctx.one
        for a, _ in axes:
            M /= 1 - ctx.exp(-ctx.re(a) * c)
        return _exp_tail(ctx, M, s - 1, ctx.re(omega), c)

    r = _integrate_to_infinity(ctx, prec, f, tail, cut)
    g = ctx.mpf(factorial(int(s) - 1)) if s == int(s) else ctx.gamma(s)
    err = r.error_bound / g
    return BarnesResult(r.value / g, err, 0, err < ctx.mpf(10) ** (-prec))


def c4_params(m: int) -> BarnesParams:
    """zeta_4(4m-2, 3 | 2+2i, 2-2i, 1+i, 1-i), the lattice behind the mixed integral."""
    if m < 2:
        raise DomainError("m must be at least 2")
    return BarnesParams(4, 4 * m - 2, 3, (2 + 2j, 2 - 2j, 1 + 1j, 1 - 1j), (1, 1, 1, 1))


def bi_params(sign: str, s, m: int) -> BarnesParams:
    """Lattice for int x^(s-1)/(cos x +- cosh x)^m: weights (1+i, 1-i) repeated m times, omega = m."""
    if sign not in ("+", "-"):
        raise DomainError("sign is '+' or '-'")
    sg = -1 if sign == "+" else 1
    return BarnesParams(2 * m, s, m, (1 + 1j, 1 - 1j) * m, (sg,) * (2 * m))


def bi_via_barnes(sign: str, s, m: int, prec: int) -> Real:
    """Berndt-type integral from its Barnes zeta (Laplace route); s a positive integer here."""
    ctx = working_context(prec)
    z = barnes_via_laplace(bi_params(sign, s, m), prec).value
    g = ctx.gamma(to_real(ctx, s))
    scale = ctx.mpf(2) ** m * g
    if sign == "-":
        scale *= (-1) ** m
    return scale * z


def verify_bi_relation(sign: str, s, m: int, prec: int) -> Real:
    """|integrate_BI - bi_via_barnes|."""
    return abs(integrate_BI(sign, s, m, prec).value - bi_via_barnes(sign, s, m, prec))


def verify_thm72(m: int, prec: int) -> Real:
    """|int x^(4m-3)/((cosh 2x - cos 2x)(cosh x - cos x)) dx - 4 (4m-3)! zeta_4(4m-2, 3 | c4)|."""
    if m < 2:
        raise DomainError("m must be at least 2")
    lhs = integrate_mixed(4 * m - 3, prec).value
    z = barnes_via_laplace(c4_params(m), prec).value
    return abs(lhs - 4 * factorial(4 * m - 3) * z)
