"""The table conventions are frozen by comparison with independently known values.

Each frozen choice must reproduce the reference; each rejected alternative must not.
"""
from fractions import Fraction
from math import factorial

import mpmath
import pytest

from berndt import closedform, jacobi, reference
from berndt.closedform import _Block, berndt_coeffs, building_block_check
from berndt.elliptic import modular_point
from berndt.hypseries import SeriesSpec, hyper_sum
from berndt.jacobi import FROZEN_NORMALIZATION, FROZEN_R_CONVENTION, Normalization, maclaurin_poly
from berndt.mpcore import working_context

PREC = 30
TOL = mpmath.mpf(10) ** -25


def _dual_block_residual(family, p, block, x="3/10"):
    sp = PREC + 10
    ctx = working_context(sp)
    pt = modular_point(x, sp)
    Y = ctx.pi ** 2 / pt.y
    zt = pt.y * pt.z / ctx.pi
    t = 1 - ctx.mpf(3) / 10
    series = hyper_sum(SeriesSpec(family, p, 1), Y, sp)
    closed, _ = block.value_and_deriv(ctx, t, zt, ctx.zero)
    return abs(series - closed)


def test_frozen_values():
    assert FROZEN_NORMALIZATION["P"] == Normalization(signed=True, egf=True)
    assert FROZEN_NORMALIZATION["q"] == Normalization(signed=False, egf=True)
    assert FROZEN_R_CONVENTION == "proof"
    assert closedform.A_PRIME_INDEX == "4m-4"


@pytest.mark.parametrize("norm,ok", [
    (Normalization(True, True), True),
    (Normalization(False, True), False),
    (Normalization(True, False), False),
])
def test_P_normalization(norm, ok):
    p = 7  # (p-1)/2 odd, so the sign matters
    blk = _Block(Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), p + 1, maclaurin_poly("P", p, norm))
    assert (_dual_block_residual("Xprime", p, blk) < TOL) is ok


def _R_with_q_normalization(n, norm):
    base = jacobi.r_poly(n)
    sign = (-1) ** (n // 2) if norm.signed else 1
    scale = Fraction(sign) if norm.egf else Fraction(sign, factorial(n))
    return base * scale


@pytest.mark.parametrize("norm,ok", [
    (Normalization(False, True), True),
    (Normalization(True, True), False),
    (Normalization(False, False), False),
])
def test_q_normalization(norm, ok):
    p = 7
    R = _R_with_q_normalization(p - 1, norm)
    blk = _Block(Fraction(-factorial(p - 1), 2 ** (p + 1)), Fraction(1), Fraction(1), p + 1, R)
    assert (_dual_block_residual("X", p, blk) < TOL) is ok


@pytest.mark.parametrize("conv,ok", [("proof", True), ("restated", True), ("theorem", False)])
def test_R_convention(conv, ok):
    assert (building_block_check("XD", 5, "3/10", PREC, convention=conv) < TOL) is ok


@pytest.mark.parametrize("m", [2, 3, 4])
def test_A_prime_index(m):
    want = reference.MIXED_INTEGRAL_COEFFS[m]
    assert berndt_coeffs(m, "4m-4").as_tuple() == want
    assert berndt_coeffs(m, "4m-2").as_tuple() != want
