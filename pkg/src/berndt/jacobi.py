"""Exact Maclaurin tables of Jacobi elliptic functions over Q[x].

The exponential-generating coefficients of sn, cn, dn (and of the quotients
cd, nd, sd and of sn^2) are integer polynomials in the parameter x, so the
tables are generated with Python ints and only converted to Fractions when an
ordinary power series (SeriesU) is requested.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .mpcore import DomainError, Real, to_real, working_context

__all__ = [
    "PolyQ",
    "SeriesU",
    "TableError",
    "PoleError",
    "jacobi_series",
    "maclaurin_poly",
    "r_poly",
    "R_CONVENTIONS",
    "FROZEN_R_CONVENTION",
    "poly_deriv_at_half",
    "jacobi_numeric",
    "deriv_at_zero",
    "table_dump",
]


class TableError(LookupError):
    """Requested coefficient lies outside the generated table."""


class PoleError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# polynomials over Q


class PolyQ:
    """Immutable polynomial in x with Fraction coefficients (index = degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("PolyQ is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ([other])
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({[str(c) for c in self.coeffs]})"

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return PolyQ([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> "PolyQ":
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other) -> "PolyQ":
        if not isinstance(other, PolyQ):
            r = Fraction(other)
            return PolyQ([c * r for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyQ()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PolyQ(out)

    __rmul__ = __mul__

    def deriv(self, r: int = 1) -> "PolyQ":
        cs = list(self.coeffs)
        for _ in range(r):
            cs = [k * cs[k] for k in range(1, len(cs))]
        return PolyQ(cs)

    def __call__(self, x):
        """Horner evaluation; exact for Fractions, numeric for mp numbers."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_real(self, ctx, x) -> Real:
        acc = ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + to_real(ctx, c)
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def _ipoly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return out


def _ipoly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _ipoly_scale(a: list[int], r: int) -> list[int]:
    return [r * v for v in a]


def _egf_mul(f: list[list[int]], g: list[list[int]], order: int) -> list[list[int]]:
    out = []
    for k in range(order + 1):
        acc: list[int] = []
        for j in range(k + 1):
            if f[j] and g[k - j]:
                acc = _ipoly_add(acc, _ipoly_scale(_ipoly_mul(f[j], g[k - j]), comb(k, j)))
        out.append(acc)
    return out


def _egf_div(f: list[list[int]], g: list[list[int]], order: int) -> list[list[int]]:
    """f / g for EGFs with g_0 = 1."""
    assert g[0] == [1]
    r: list[list[int]] = []
    for k in range(order + 1):
        acc = list(f[k])
        for j in range(1, k + 1):
            if g[j] and r[k - j]:
                acc = _ipoly_add(acc, _ipoly_scale(_ipoly_mul(g[j], r[k - j]), -comb(k, j)))
        r.append(acc)
    return r


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


# ---------------------------------------------------------------------------
# power series in u with PolyQ coefficients

_PARITIES = ("even", "odd", "none")


@dataclass(frozen=True)
class SeriesU:
    """Truncated ordinary power series sum_k coeffs[k] u^k, coefficients in Q[x]."""

    coeffs: tuple[PolyQ, ...]
    order: int
    parity: str = "none"

    def __post_init__(self):
        if self.parity not in _PARITIES:
            raise ValueError(self.parity)
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient list must have order + 1 entries")
        if self.parity != "none":
            skip = 1 if self.parity == "even" else 0
            for k in range(skip, self.order + 1, 2):
                if not self.coeffs[k].is_zero():
                    raise ValueError(f"declared {self.parity} series has nonzero u^{k} coefficient")

    @staticmethod
    def from_egf(egf: list[list[int]], parity: str = "none") -> "SeriesU":
        cs = tuple(PolyQ([Fraction(c, factorial(k)) for c in p]) for k, p in enumerate(egf))
        return SeriesU(cs, len(egf) - 1, parity)

    def egf(self, k: int) -> PolyQ:
        """k! times the u^k coefficient."""
        return self.coeffs[k] * factorial(k)

    def _binop_parity(self, other: "SeriesU", mul: bool) -> str:
        if "none" in (self.parity, other.parity):
            return "none"
        if not mul:
            return self.parity if self.parity == other.parity else "none"
        return "even" if self.parity == other.parity else "odd"

    def __add__(self, other: "SeriesU") -> "SeriesU":
        n = min(self.order, other.order)
        return SeriesU(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n,
                       self._binop_parity(other, False))

    def __sub__(self, other: "SeriesU") -> "SeriesU":
        n = min(self.order, other.order)
        return SeriesU(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1)), n,
                       self._binop_parity(other, False))

    def __mul__(self, other) -> "SeriesU":
        if not isinstance(other, SeriesU):
            return SeriesU(tuple(c * other for c in self.coeffs), self.order, self.parity)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = PolyQ()
            for j in range(k + 1):
                a, b = self.coeffs[j], other.coeffs[k - j]
                if a.coeffs and b.coeffs:
                    acc = acc + a * b
            out.append(acc)
        return SeriesU(tuple(out), n, self._binop_parity(other, True))

    def __truediv__(self, other: "SeriesU") -> "SeriesU":
        if other.coeffs[0] != PolyQ([1]):
            raise DomainError("series division needs a divisor with constant term 1")
        n = min(self.order, other.order)
        r: list[PolyQ] = []
        for k in range(n + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                if other.coeffs[j].coeffs and r[k - j].coeffs:
                    acc = acc - other.coeffs[j] * r[k - j]
            r.append(acc)
        return SeriesU(tuple(r), n, self._binop_parity(other, True) if other.parity == "even" else "none")

    def rescale(self, c) -> "SeriesU":
        """Series of f(c u)."""
        c = Fraction(c)
        return SeriesU(tuple(p * c ** k for k, p in enumerate(self.coeffs)), self.order, self.parity)

    def at_x(self, x: Fraction) -> list[Fraction]:
        return [p(Fraction(x)) for p in self.coeffs]

    def eval_real(self, ctx, x, u) -> Real:
        acc = ctx.zero
        for p in reversed(self.coeffs):
            acc = acc * u + p.eval_real(ctx, x)
        return acc


@lru_cache(maxsize=8)
def _egf_tables(order: int) -> dict[str, tuple[tuple[int, ...], ...]]:
    """Integer EGF coefficient tables of sn, cn, dn, cd, nd, sd, sn^2 up to u^order.

    sn' = cn dn, cn' = -sn dn, dn' = -x sn cn, integrated term by term.
    """
    sn: list[list[int]] = [[]]
    cn: list[list[int]] = [[1]]
    dn: list[list[int]] = [[1]]
    for k in range(order):
        s_next: list[int] = []
        c_next: list[int] = []
        d_next: list[int] = []
        for j in range(k + 1):
            b = comb(k, j)
            if cn[j] and dn[k - j]:
                s_next = _ipoly_add(s_next, _ipoly_scale(_ipoly_mul(cn[j], dn[k - j]), b))
            if sn[j] and dn[k - j]:
                c_next = _ipoly_add(c_next, _ipoly_scale(_ipoly_mul(sn[j], dn[k - j]), -b))
            if sn[j] and cn[k - j]:
                # the extra factor x shifts degrees by one
                d_next = _ipoly_add(d_next, _ipoly_scale([0] + _ipoly_mul(sn[j], cn[k - j]), -b))
        sn.append(_trim(s_next))
        cn.append(_trim(c_next))
        dn.append(_trim(d_next))
    one = [[1]] + [[] for _ in range(order)]
    tables = {
        "sn": sn,
        "cn": cn,
        "dn": dn,
        "cd": _egf_div(cn, dn, order),
        "nd": _egf_div(one, dn, order),
        "sd": _egf_div(sn, dn, order),
        "sn2": _egf_mul(sn, sn, order),
    }
    return {k: tuple(tuple(_trim(list(p))) for p in v) for k, v in tables.items()}


_TABLE_STEP = 8


def _tables_for(n: int) -> dict[str, tuple[tuple[int, ...], ...]]:
    order = max(_TABLE_STEP, -(-(n + 1) // _TABLE_STEP) * _TABLE_STEP)
    return _egf_tables(order)


_SERIES_PARITY = {"sn": "odd", "cn": "even", "dn": "even", "cd": "even", "nd": "even", "sd": "odd", "sn2": "even"}


def jacobi_series(order: int) -> dict[str, SeriesU]:
    """sn, cn, dn, cd, nd, sd and sn^2 as exact series to u^order."""
    if order < 2:
        raise DomainError("jacobi_series needs order >= 2")
    tab = _tables_for(order)
    return {
        name: SeriesU.from_egf([list(p) for p in tab[name][: order + 1]], _SERIES_PARITY[name])
        for name in _SERIES_PARITY
    }


# ---------------------------------------------------------------------------
# the coefficient polynomials S, A, P, q


@dataclass(frozen=True)
class Normalization:
    """How a table polynomial is read off a series: sign (-1)^(n//2) or not, EGF or ordinary."""

    signed: bool
    egf: bool


# Frozen after calibration against the lemniscatic closed forms (see
# tests/test_calibration.py): P carries the alternating sign like S and A,
# q is the plain EGF coefficient of sn^2.
FROZEN_NORMALIZATION = {"P": Normalization(signed=True, egf=True), "q": Normalization(signed=False, egf=True)}

_KIND_SOURCE = {"S": "cd", "A": "nd", "P": "sd", "q": "sn2"}


def maclaurin_poly(kind: str, n: int, normalization: Normalization | None = None) -> PolyQ:
    """Coefficient polynomial of the Maclaurin series of cd (S), nd (A), sd (P) or sn^2 (q).

    S_n = (-1)^(n/2) n! [u^n] cd and A_n = (-1)^(n/2) n! [u^n] nd for even n,
    P_n = (-1)^((n-1)/2) n! [u^n] sd for odd n, q_n = n! [u^n] sn^2 for even n.
    """
    if kind not in _KIND_SOURCE:
        raise DomainError(f"unknown table kind {kind!r}")
    if n < 0:
        raise TableError(f"negative index {n}")
    odd = kind == "P"
    if (n % 2 == 1) != odd:
        raise TableError(f"{kind}_{n} is not part of the table (index parity)")
    if normalization is None:
        normalization = FROZEN_NORMALIZATION.get(kind, Normalization(True, True))
    raw = _tables_for(n)[_KIND_SOURCE[kind]][n]
    sign = (-1) ** (n // 2) if normalization.signed else 1
    scale = Fraction(sign) if normalization.egf else Fraction(sign, factorial(n))
    poly = PolyQ([c * scale for c in raw])
    if kind in ("S", "A") and not poly.is_integral():
        raise AssertionError(f"{kind}_{n} left Z[x]")
    return poly


def _poly_binomial_power(base: Sequence[int], e: int) -> PolyQ:
    out = PolyQ([1])
    b = PolyQ(base)
    for _ in range(e):
        out = out * b
    return out


# The three ways the argument of q in R_{p-1} is written; "proof" and
# "restated" are the same rational function, "theorem" differs by a sign.
R_CONVENTIONS = {"theorem": 1, "proof": -1, "restated": -1}
FROZEN_R_CONVENTION = "proof"


def r_poly(n: int, convention: str = FROZEN_R_CONVENTION) -> PolyQ:
    """R_n(t) with R_n(1 - x) = (-x)^(n/2 - 1) / n! * q_n(lambda), t = 1 - x.

    The "proof" convention uses lambda = (x-1)/x, the "theorem" convention
    lambda = (1-x)/x. Under the frozen convention R_n equals
    (-1)^(n/2 + 1) times the ordinary u^n coefficient of sd(u)^2.
    """
    if n < 2 or n % 2:
        raise TableError("R_n is defined for even n >= 2")
    sign = R_CONVENTIONS[convention]
    q = maclaurin_poly("q", n)
    d = n // 2 - 1
    # (-x)^d q(lambda) with x = 1 - t and lambda = sign * t/(1-t)
    out = PolyQ()
    for k, qk in enumerate(q.coeffs):
        if qk:
            term = _poly_binomial_power([0, sign], k) * _poly_binomial_power([1, -1], d - k)
            out = out + term * (qk * (-1) ** d)
    return out * Fraction(1, factorial(n))


def poly_deriv_at_half(P: PolyQ, r: int) -> Fraction:
    if r < 0:
        raise DomainError("derivative order must be non-negative")
    return P.deriv(r)(Fraction(1, 2))


# ---------------------------------------------------------------------------
# numeric values by the descending Landen (AGM) scheme

_NUMERIC_FNS = ("sn", "cn", "dn", "cd", "nd", "sd")


def _jacobi_triple(ctx, u, x):
    a, b, c = ctx.one, ctx.sqrt(1 - x), ctx.sqrt(x)
    a_list, c_list = [a], [c]
    stop = ctx.mpf(10) ** (-(ctx.dps // 2) - 2)
    while abs(c) > stop * a:
        a, b, c = (a + b) / 2, ctx.sqrt(a * b), (a - b) / 2
        a_list.append(a)
        c_list.append(c)
    N = len(a_list) - 1
    phi = (2 ** N) * a_list[N] * u
    phis = [phi]
    for n in range(N, 0, -1):
        phi = (phi + ctx.asin(c_list[n] / a_list[n] * ctx.sin(phi))) / 2
        phis.append(phi)
    phi0 = phis[-1]
    sn, cn = ctx.sin(phi0), ctx.cos(phi0)
    if N == 0:
        dn = ctx.sqrt(1 - x * sn * sn)
    else:
        dn = cn / ctx.cos(phis[-2] - phi0)
    return sn, cn, dn


def jacobi_numeric(fn: str, u, x, prec: int) -> Real:
    if fn not in _NUMERIC_FNS:
        raise DomainError(f"unknown Jacobi function {fn!r}")
    ctx = working_context(prec)
    u, x = to_real(ctx, u), to_real(ctx, x)
    if not 0 < x < 1:
        raise DomainError("jacobi_numeric needs 0 < x < 1")
    sn, cn, dn = _jacobi_triple(ctx, u, x)
    if fn in ("cd", "nd", "sd") and dn == 0:
        raise PoleError(f"{fn} has a pole at u = {u}")
    return {"sn": sn, "cn": cn, "dn": dn, "cd": cn / dn, "nd": 1 / dn, "sd": sn / dn}[fn]


# ---------------------------------------------------------------------------
# derivatives at u = 0 of the two Kuznetsov-type quotients


def _qmul(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    return [sum((a[j] * b[k - j] for j in range(k + 1)), Fraction(0)) for k in range(n + 1)]


def _qdiv(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    if b[0] == 0:
        raise ZeroDivisionError("series division by a series with zero constant term")
    r: list[Fraction] = []
    for k in range(n + 1):
        r.append((a[k] - sum((b[j] * r[k - j] for j in range(1, k + 1)), Fraction(0))) / b[0])
    return r


DERIV_EXPRS = ("sn/cd", "sn2/(cd2*sd(2u))")


def deriv_at_zero(expr: str, order: int, x) -> Fraction:
    """Exact order-th u-derivative at 0 of sn/cd or sn^2/(cd^2 sd(2u)) at rational x."""
    if expr not in DERIV_EXPRS:
        raise DomainError(f"unknown expression {expr!r}")
    if order < 1 or order % 2 == 0:
        raise DomainError("both expressions are odd; order must be an odd positive integer")
    x = Fraction(x)
    n = order + 2
    ser = jacobi_series(n)
    sn, cd, sd, sn2 = (ser[k].at_x(x) for k in ("sn", "cd", "sd", "sn2"))
    if expr == "sn/cd":
        coeffs = _qdiv(sn, cd, order)
    else:
        # divide numerator and sd(2u) by u to make the division regular
        num = sn2[1:] + [Fraction(0)]
        sd2u = [c * 2 ** k for k, c in enumerate(sd)]
        den = _qmul(_qmul(cd, cd, n), sd2u[1:] + [Fraction(0)], n - 1)
        coeffs = _qdiv(num, den, order)
    return coeffs[order] * factorial(order)


def table_dump(max_n: int) -> str:
    """JSON list of {kind, n, coeffs} for S, A, P, q up to index max_n."""
    rows = []
    for kind in ("S", "A", "P", "q"):
        start = 1 if kind == "P" else 0
        for n in range(start, max_n + 1, 2):
            p = maclaurin_poly(kind, n)
            rows.append({"kind": kind, "n": n, "coeffs": [f"{c.numerator}/{c.denominator}" for c in p.coeffs]})
    return json.dumps(rows, indent=1)
