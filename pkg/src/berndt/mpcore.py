"""Precision contexts, the AGM, Gamma(1/4), and exact Gamma(1/4)/pi/sqrt(2) expressions.

Every numerical routine in the package takes an explicit ``prec`` (decimal
digits) and works in a private :class:`mpmath.MPContext` carrying
``prec + guard`` digits, so nothing depends on the global ``mpmath.mp`` state.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

import mpmath

GUARD_DIGITS = 10

Real = Any  # an mpf belonging to some MPContext


class DomainError(ValueError):
    """Argument outside the documented domain of an operation."""


def guard_digits(op_count: int = 1) -> int:
    extra = math.ceil(math.log10(op_count)) if op_count > 1 else 0
    return GUARD_DIGITS + extra


@lru_cache(maxsize=None)
def context(dps: int) -> mpmath.ctx_mp.MPContext:
    """Shared context at ``dps`` decimal digits. Treat it as read-only."""
    if dps < 1:
        raise DomainError(f"precision must be positive, got {dps}")
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def working_context(prec: int, op_count: int = 1) -> mpmath.ctx_mp.MPContext:
    return context(int(prec) + guard_digits(op_count))


def to_real(ctx, v) -> Real:
    """Convert ints, Fractions, decimal strings "p/q" and mp numbers into ``ctx``."""
    if isinstance(v, Fraction):
        return ctx.mpf(v.numerator) / v.denominator
    if isinstance(v, str) and "/" in v:
        return to_real(ctx, Fraction(v))
    if isinstance(v, str) and v.strip().lower() == "pi":
        return +ctx.pi
    return ctx.mpf(v)


def to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise DomainError(f"expected an exact rational, got {v!r}")


def _agm(ctx, a, b):
    if a <= 0 or b <= 0:
        raise DomainError("agm requires positive arguments")
    tol = ctx.mpf(2) ** (-ctx.prec + 4)
    while abs(a - b) > tol * a:
        a, b = (a + b) / 2, ctx.sqrt(a * b)
    return (a + b) / 2


def agm(a, b, prec: int) -> Real:
    """Arithmetic-geometric mean of two positive numbers."""
    ctx = working_context(prec)
    return _agm(ctx, to_real(ctx, a), to_real(ctx, b))


@lru_cache(maxsize=64)
def _gamma_quarter_cached(dps: int):
    ctx = context(dps)
    g2 = 2 * ctx.pi ** ctx.mpf(1.5) / _agm(ctx, ctx.one, 1 / ctx.sqrt(2))
    return ctx.sqrt(g2)


def gamma_quarter(prec: int) -> Real:
    """Gamma(1/4) from Gamma(1/4)^2 = 2 pi^(3/2) / agm(1, 1/sqrt 2)."""
    if prec < 10:
        raise DomainError("gamma_quarter needs prec >= 10")
    return _gamma_quarter_cached(int(prec) + GUARD_DIGITS)


# ---------------------------------------------------------------------------
# GammaPiExpr


@dataclass(frozen=True)
class Term:
    """coeff * 2^(two_halves/2) * Gamma(1/4)^gamma_exp * pi^(pi_halves/2)."""

    coeff: Fraction
    two_halves: int
    gamma_exp: int
    pi_halves: int

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.gamma_exp, self.pi_halves, self.two_halves)


def _fold_twos(coeff: Fraction, two_halves: int) -> tuple[Fraction, int]:
    # keep two_halves in {0, 1}; whole powers of two move into the rational
    whole, half = divmod(two_halves, 2)
    if whole >= 0:
        coeff = coeff * (1 << whole)
    else:
        coeff = coeff / (1 << -whole)
    return coeff, half


@dataclass(frozen=True)
class GammaPiExpr:
    """Exact Q-linear combination of 2^(c/2) Gamma(1/4)^a pi^(b/2) monomials.

    Instances are always normalized: integer powers of two are folded into the
    coefficient, like monomials are merged, zero terms dropped, and terms sorted
    by (gamma_exp, pi_halves, two_halves). Equality is structural.
    """

    terms: tuple[Term, ...] = ()

    @staticmethod
    def normalize(terms: Iterable[Term]) -> "GammaPiExpr":
        acc: dict[tuple[int, int, int], Fraction] = {}
        for t in terms:
            c, h = _fold_twos(Fraction(t.coeff), t.two_halves)
            k = (t.gamma_exp, t.pi_halves, h)
            acc[k] = acc.get(k, Fraction(0)) + c
        out = [Term(c, k[2], k[0], k[1]) for k, c in sorted(acc.items()) if c != 0]
        return GammaPiExpr(tuple(out))

    @staticmethod
    def monomial(coeff, two_halves: int = 0, gamma_exp: int = 0, pi_halves: int = 0) -> "GammaPiExpr":
        return GammaPiExpr.normalize([Term(Fraction(coeff), two_halves, gamma_exp, pi_halves)])

    def __add__(self, other: "GammaPiExpr") -> "GammaPiExpr":
        return GammaPiExpr.normalize(self.terms + other.terms)

    def __neg__(self) -> "GammaPiExpr":
        return self.scale(-1)

    def __sub__(self, other: "GammaPiExpr") -> "GammaPiExpr":
        return self + (-other)

    def scale(self, r) -> "GammaPiExpr":
        r = Fraction(r)
        return GammaPiExpr.normalize(Term(t.coeff * r, t.two_halves, t.gamma_exp, t.pi_halves) for t in self.terms)

    def times_monomial(self, two_halves: int = 0, gamma_exp: int = 0, pi_halves: int = 0) -> "GammaPiExpr":
        return GammaPiExpr.normalize(
            Term(t.coeff, t.two_halves + two_halves, t.gamma_exp + gamma_exp, t.pi_halves + pi_halves)
            for t in self.terms
        )

    def coefficient(self, gamma_exp: int, pi_halves: int, two_halves: int = 0) -> Fraction:
        for t in self.terms:
            if t.key == (gamma_exp, pi_halves, two_halves):
                return t.coeff
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.terms)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": f"{t.coeff.numerator}/{t.coeff.denominator}",
                    "two_halves": t.two_halves,
                    "gamma_exp": t.gamma_exp,
                    "pi_halves": t.pi_halves,
                }
                for t in self.terms
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @staticmethod
    def from_json_obj(obj: dict) -> "GammaPiExpr":
        return GammaPiExpr.normalize(
            Term(Fraction(t["coeff"]), int(t["two_halves"]), int(t["gamma_exp"]), int(t["pi_halves"]))
            for t in obj["terms"]
        )

    @staticmethod
    def from_json(text: str) -> "GammaPiExpr":
        return GammaPiExpr.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            c = t.coeff
            sign = "-" if c < 0 else "+"
            body = [str(abs(c))]
            if t.two_halves:
                body.append("sqrt(2)")
            if t.gamma_exp:
                body.append(f"G^{t.gamma_exp}")
            if t.pi_halves:
                e = Fraction(t.pi_halves, 2)
                body.append(f"pi^({e})")
            parts.append(f"{sign} {'*'.join(body)}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def expr_eval(e: GammaPiExpr, prec: int) -> Real:
    """Numeric value of a GammaPiExpr."""
    ctx = working_context(prec, max(1, len(e.terms)))
    g = ctx.mpf(gamma_quarter(ctx.dps))
    sqrt2 = ctx.sqrt(2)
    sqrtpi = ctx.sqrt(ctx.pi)
    total = ctx.zero
    for t in e.terms:
        v = to_real(ctx, t.coeff) * g ** t.gamma_exp
        v *= sqrt2 ** t.two_halves
        v *= sqrtpi ** t.pi_halves
        total += v
    return total


def expr_combine(e1: GammaPiExpr, e2: GammaPiExpr) -> GammaPiExpr:
    return e1 + e2
