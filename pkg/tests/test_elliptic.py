from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from berndt.elliptic import ellE, ellK, hyp2f1, modular_point
from berndt.mpcore import DomainError, gamma_quarter, working_context
from conftest import tight

GRID = ["1/10", "1/5", "3/10", "2/5", "1/2", "3/5", "7/10", "4/5", "9/10"]
P = 50


@pytest.mark.parametrize("x", GRID)
def test_legendre_relation(x):
    ctx = working_context(P)
    pt = modular_point(x, P)
    assert abs(pt.E * pt.Kc + pt.Ec * pt.K - pt.K * pt.Kc - ctx.pi / 2) < tight(P)


@pytest.mark.parametrize("x", GRID)
def test_modular_involution(x):
    ctx = working_context(P)
    y1 = modular_point(x, P).y
    y2 = modular_point(1 - Fraction(x), P).y
    assert abs(y1 * y2 - ctx.pi ** 2) < tight(P)


@pytest.mark.parametrize("x", GRID)
def test_K_and_E_match_mpmath(x, mp50):
    xv = mp50.mpf(Fraction(x).numerator) / Fraction(x).denominator
    assert abs(ellK(x, P) - mp50.ellipk(xv)) < tight(P)
    assert abs(ellE(x, P) - mp50.ellipe(xv)) < tight(P)


def test_lemniscatic_point():
    ctx = working_context(P)
    pt = modular_point("1/2", P)
    G = gamma_quarter(P)
    assert abs(pt.y - ctx.pi) < tight(P)
    assert abs(pt.z - G ** 2 / (2 * ctx.pi ** ctx.mpf(1.5))) < tight(P)
    assert abs(pt.q - ctx.exp(-ctx.pi)) < tight(P)


@pytest.mark.parametrize("x", ["1/5", "1/2", "4/5"])
def test_zprime_is_derivative_of_z(x):
    ctx = working_context(P)
    x0 = Fraction(x)
    h = Fraction(1, 10 ** 12)
    zp = (modular_point(x0 + h, P).z - modular_point(x0 - h, P).z) * 10 ** 12 / 2
    assert abs(zp - modular_point(x0, P).zprime) < ctx.mpf(10) ** -20


@pytest.mark.parametrize("x", GRID)
def test_K_is_hypergeometric(x):
    ctx = working_context(P)
    assert abs(ctx.pi / 2 * hyp2f1("1/2", "1/2", 1, x, P) - ellK(x, P)) < tight(P)


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=-2, max_value=3, max_denominator=8),
       st.fractions(min_value=-2, max_value=3, max_denominator=8),
       st.fractions(min_value=Fraction(1, 8), max_value=4, max_denominator=8),
       st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=20))
def test_hyp2f1_matches_mpmath(a, b, c, x):
    ctx = working_context(30)
    f = lambda q: ctx.mpf(q.numerator) / q.denominator
    want = ctx.hyp2f1(f(a), f(b), f(c), f(x))
    assert abs(hyp2f1(a, b, c, x, 30) - want) <= (1 + abs(want)) * ctx.mpf(10) ** -25


@pytest.mark.parametrize("x", [0, 1, "-1/2", "3/2"])
def test_outside_unit_interval(x):
    with pytest.raises(DomainError):
        modular_point(x, 30)


def test_hyp2f1_domain():
    with pytest.raises(DomainError):
        hyp2f1(1, 1, 0, "1/2", 30)
    with pytest.raises(DomainError):
        hyp2f1(1, 1, 1, 1, 30)
