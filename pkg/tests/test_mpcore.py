from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from berndt.mpcore import (
    DomainError, GammaPiExpr, Term, agm, expr_combine, expr_eval, gamma_quarter, guard_digits,
    to_fraction, to_real, working_context,
)


def test_agm_fixed_point():
    assert agm(1, 1, 30) == 1


def test_agm_known_value():
    v = agm(1, mpmath.sqrt(2), 50)
    assert mpmath.nstr(v, 11) == "1.1981402347"


def test_agm_symmetric():
    assert abs(agm(2, 3, 40) - agm(3, 2, 40)) < mpmath.mpf(10) ** -40


@pytest.mark.parametrize("a,b", [(0, 1), (-1, 2), (1, 0)])
def test_agm_rejects_non_positive(a, b):
    with pytest.raises(DomainError):
        agm(a, b, 20)


@pytest.mark.parametrize("prec", [15, 60, 120])
def test_gamma_quarter_matches_mpmath(prec):
    ctx = working_context(prec)
    assert abs(gamma_quarter(prec) - ctx.gamma(ctx.mpf(1) / 4)) < ctx.mpf(10) ** -prec


def test_gamma_quarter_needs_ten_digits():
    with pytest.raises(DomainError):
        gamma_quarter(5)


def test_guard_digits_grow_with_operation_count():
    assert guard_digits(1) < guard_digits(10 ** 6)


def test_to_real_parses_fractions_and_pi():
    ctx = working_context(30)
    assert to_real(ctx, "3/10") == ctx.mpf(3) / 10
    assert to_real(ctx, "pi") == ctx.pi
    assert to_real(ctx, Fraction(1, 3)) == ctx.mpf(1) / 3


def test_to_fraction_rejects_floats():
    assert to_fraction("2/6") == Fraction(1, 3)
    with pytest.raises(DomainError):
        to_fraction(0.1)


def test_powers_of_two_fold_into_coefficient():
    # 15 G^10 / (8192 sqrt2 pi^(17/2)) has coeff 15/16384 on sqrt2
    e = GammaPiExpr.monomial(Fraction(15, 8192), -1, 10, -17)
    (t,) = e.terms
    assert (t.coeff, t.two_halves, t.gamma_exp, t.pi_halves) == (Fraction(15, 16384), 1, 10, -17)


def test_like_terms_merge_and_cancel():
    a = GammaPiExpr.monomial(Fraction(1, 2), 0, 4, -2)
    assert (a + a).terms == (Term(Fraction(1), 0, 4, -2),)
    assert (a - a).terms == ()


def test_terms_sorted():
    e = GammaPiExpr.monomial(1, 0, 8, -4) + GammaPiExpr.monomial(1, 1, 2, 0) + GammaPiExpr.monomial(1, 0, 2, -3)
    keys = [(t.gamma_exp, t.pi_halves, t.two_halves) for t in e.terms]
    assert keys == sorted(keys)


def test_eval_of_single_monomial(mp50):
    e = GammaPiExpr.monomial(Fraction(3, 7), 1, 2, -3)
    G = mp50.gamma(mp50.mpf(1) / 4)
    want = mp50.mpf(3) / 7 * mp50.sqrt(2) * G ** 2 * mp50.pi ** (-mp50.mpf(3) / 2)
    assert abs(expr_eval(e, 50) - want) < mp50.mpf(10) ** -48


def test_str_is_readable():
    e = GammaPiExpr.monomial(Fraction(15, 8192), -1, 10, -17)
    assert str(e) == "15/16384*sqrt(2)*G^10*pi^(-17/2)"


term_st = st.tuples(
    st.fractions(min_value=-50, max_value=50, max_denominator=64),
    st.integers(-6, 6), st.integers(-12, 12), st.integers(-12, 12),
)
expr_st = st.lists(term_st, max_size=6).map(
    lambda ts: GammaPiExpr.normalize([Term(Fraction(c), a, b, d) for c, a, b, d in ts]))


@given(expr_st)
def test_json_round_trip_is_exact(e):
    assert GammaPiExpr.from_json(e.to_json()) == e
    assert GammaPiExpr.from_json(e.to_json()).to_json() == e.to_json()


@given(expr_st)
def test_normalize_is_idempotent(e):
    again = GammaPiExpr.normalize(list(e.terms))
    assert again == e
    assert all(t.coeff != 0 for t in e.terms)
    assert all(t.two_halves in (0, 1) for t in e.terms)
    keys = [(t.gamma_exp, t.pi_halves, t.two_halves) for t in e.terms]
    assert len(set(keys)) == len(keys) == len(sorted(keys))


@settings(max_examples=30, deadline=None)
@given(expr_st, expr_st)
def test_eval_is_additive(a, b):
    ctx = working_context(30)
    lhs = expr_eval(a + b, 30)
    rhs = expr_eval(a, 30) + expr_eval(b, 30)
    scale = 1 + abs(expr_eval(a, 30)) + abs(expr_eval(b, 30))
    assert abs(lhs - rhs) <= scale * ctx.mpf(10) ** -28


@given(expr_st, expr_st)
def test_addition_commutes(a, b):
    assert a + b == b + a
    assert expr_combine(a, b) == a + b


@given(expr_st, st.fractions(min_value=-9, max_value=9, max_denominator=9))
def test_scale_distributes(e, r):
    assert e.scale(r) + e.scale(-r) == GammaPiExpr.normalize([])
