"""Complete elliptic integrals, 2F1, and the modular triple (x, y, z)."""
from __future__ import annotations

from dataclasses import dataclass

from .mpcore import DomainError, Real, working_context, to_real

__all__ = ["ModularPoint", "ellK", "ellE", "hyp2f1", "modular_point"]


def _check_open_unit(x) -> None:
    if not 0 < x < 1:
        raise DomainError(f"parameter x must lie in (0, 1), got {x}")


def _agm_K_E(ctx, x):
    """K(x) and E(x) from one AGM run (Gauss-Legendre scheme)."""
    a, b = ctx.one, ctx.sqrt(1 - x)
    c2_sum = x / 2  # 2^(n-1) c_n^2 with c_0^2 = x
    weight = ctx.mpf(1) / 2
    tol = ctx.mpf(2) ** (-ctx.prec + 4)
    while abs(a - b) > tol * a:
        c = (a - b) / 2
        a, b = (a + b) / 2, ctx.sqrt(a * b)
        weight *= 2
        c2_sum += weight * c * c
    K = ctx.pi / (2 * a)
    return K, K * (1 - c2_sum)


def ellK(x, prec: int) -> Real:
    """Complete integral of the first kind K(x) = pi / (2 agm(1, sqrt(1-x)))."""
    ctx = working_context(prec)
    x = to_real(ctx, x)
    _check_open_unit(x)
    return _agm_K_E(ctx, x)[0]


def ellE(x, prec: int) -> Real:
    """Complete integral of the second kind via the AGM with accumulated c_n^2."""
    ctx = working_context(prec)
    x = to_real(ctx, x)
    _check_open_unit(x)
    return _agm_K_E(ctx, x)[1]


def hyp2f1(a, b, c, x, prec: int) -> Real:
    """Gauss series 2F1(a, b; c; x) for |x| < 1 with a ratio-test tail bound."""
    ctx = working_context(prec)
    a, b, c, x = (to_real(ctx, v) for v in (a, b, c, x))
    if c <= 0 and c == ctx.floor(c):
        raise DomainError("c must not be a non-positive integer")
    if not abs(x) < 1:
        raise DomainError("hyp2f1 series needs |x| < 1")
    eps = ctx.mpf(10) ** (-prec - 2)
    total = ctx.zero
    term = ctx.one
    k = 0
    while True:
        total += term
        if term == 0:
            return total
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        k += 1
        # for j >= k every later term ratio is at most rho in modulus
        if c + k > 0:
            rho = abs(x) * (1 + abs(a - c) / (c + k)) * (1 + abs(b - 1) / (1 + k))
            if rho < 1 and abs(term) / (1 - rho) < eps * max(1, abs(total)):
                return total + term
        if k > 100000:
            raise DomainError("hyp2f1 series failed to converge")


@dataclass(frozen=True)
class ModularPoint:
    """Ramanujan's triple at parameter x: y = pi K(1-x)/K(x), q = e^-y, z = 2K/pi."""

    x: Real
    y: Real
    q: Real
    z: Real
    zprime: Real
    K: Real
    E: Real
    Kc: Real
    Ec: Real


def modular_point(x, prec: int) -> ModularPoint:
    ctx = working_context(prec)
    x = to_real(ctx, x)
    _check_open_unit(x)
    K, E = _agm_K_E(ctx, x)
    Kc, Ec = _agm_K_E(ctx, 1 - x)
    y = ctx.pi * Kc / K
    z = 2 * K / ctx.pi
    zprime = (E - (1 - x) * K) / (ctx.pi * x * (1 - x))
    return ModularPoint(x=x, y=y, q=ctx.exp(-y), z=z, zprime=zprime, K=K, E=E, Kc=Kc, Ec=Ec)
