from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from berndt.jacobi import (
    PolyQ, PoleError, SeriesU, TableError, deriv_at_zero, jacobi_numeric, jacobi_series,
    maclaurin_poly, poly_deriv_at_half, r_poly, table_dump,
)
from berndt.mpcore import DomainError, working_context

ORDER = 30
ONE = PolyQ([1])
X = PolyQ([0, 1])


@pytest.fixture(scope="module")
def ser():
    return jacobi_series(ORDER)


def _is_one(s: SeriesU) -> bool:
    return s.coeffs[0] == ONE and all(c.is_zero() for c in s.coeffs[1:])


def test_pythagorean_identity(ser):
    assert _is_one(ser["sn"] * ser["sn"] + ser["cn"] * ser["cn"])


def test_dn_identity(ser):
    assert _is_one(ser["dn"] * ser["dn"] + ser["sn"] * ser["sn"] * X)


def test_quotients_are_consistent(ser):
    assert (ser["cd"] * ser["dn"]).coeffs == ser["cn"].coeffs
    assert (ser["nd"] * ser["dn"]).coeffs[: ORDER + 1] == (ser["dn"] / ser["dn"]).coeffs
    assert (ser["sd"] * ser["dn"]).coeffs == ser["sn"].coeffs
    assert ser["sn2"].coeffs == (ser["sn"] * ser["sn"]).coeffs


def test_derivative_of_sn_is_cn_dn(ser):
    d = [ser["sn"].coeffs[k + 1] * (k + 1) for k in range(ORDER)]
    cndn = (ser["cn"] * ser["dn"]).coeffs[:ORDER]
    assert d == list(cndn)


def test_parity_declared_and_enforced(ser):
    assert ser["sn"].parity == "odd" and ser["cd"].parity == "even"
    bad = (PolyQ([1]), PolyQ([1]))
    with pytest.raises(ValueError):
        SeriesU(bad, 1, "even")


def test_low_order_tables():
    assert maclaurin_poly("S", 4) == PolyQ([1, -6, 5])
    assert maclaurin_poly("q", 2) == PolyQ([2])
    assert maclaurin_poly("q", 4) == PolyQ([-8, -8])
    assert maclaurin_poly("S", 0) == ONE


@pytest.mark.parametrize("n", range(0, 25, 2))
def test_S_and_A_are_integral(n):
    assert maclaurin_poly("S", n).is_integral()
    assert maclaurin_poly("A", n).is_integral()


def test_index_parity_checked():
    with pytest.raises(TableError):
        maclaurin_poly("S", 3)
    with pytest.raises(TableError):
        maclaurin_poly("P", 4)
    with pytest.raises(DomainError):
        maclaurin_poly("Z", 2)


def test_values_at_half():
    h = Fraction(1, 2)
    assert maclaurin_poly("S", 4)(h) == Fraction(-3, 4)
    assert poly_deriv_at_half(maclaurin_poly("S", 4), 1) == -1
    assert maclaurin_poly("P", 5)(h) == -3
    assert r_poly(2)(h) == 1
    assert r_poly(6)(h) == Fraction(-1, 20)


@pytest.mark.parametrize("n", [2, 4, 6, 10, 14])
def test_R_is_sd_squared_coefficient(ser, n):
    sd2 = ser["sd"] * ser["sd"]
    # R_n(t) = (-1)^(n/2+1) [u^n] sd^2 at parameter t
    assert r_poly(n) == sd2.coeffs[n] * (-1) ** (n // 2 + 1)


def test_R_defined_for_even_indices_only():
    with pytest.raises(TableError):
        r_poly(3)


@pytest.mark.parametrize("fn", ["sn", "cn", "dn", "cd", "nd", "sd"])
@pytest.mark.parametrize("u,x", [("1/3", "1/2"), ("2", "3/10"), ("7/5", "9/10")])
def test_numeric_matches_mpmath(fn, u, x):
    ctx = working_context(40)
    uu, xx = (ctx.mpf(Fraction(v).numerator) / Fraction(v).denominator for v in (u, x))
    want = ctx.ellipfun(fn, uu, m=xx)
    assert abs(jacobi_numeric(fn, u, x, 40) - want) < ctx.mpf(10) ** -35


@pytest.mark.parametrize("x", ["1/2", "3/10"])
def test_numeric_matches_series_near_zero(ser, x):
    ctx = working_context(40)
    u = ctx.mpf(1) / 20
    for fn in ("sn", "cn", "dn"):
        approx = ser[fn].eval_real(ctx, ctx.mpf(Fraction(x).numerator) / Fraction(x).denominator, u)
        assert abs(jacobi_numeric(fn, u, x, 40) - approx) < ctx.mpf(10) ** -35


def test_pole_reported():
    # dn never vanishes for real u and 0 < x < 1; the domain check still guards x
    with pytest.raises(DomainError):
        jacobi_numeric("sn", 1, 1, 30)
    assert issubclass(PoleError, ArithmeticError)


def test_quotient_derivatives():
    assert [deriv_at_zero("sn/cd", k, "1/2") for k in (1, 3, 5)] == [1, 0, 12]
    assert [deriv_at_zero("sn2/(cd2*sd(2u))", k, "1/2") for k in (1, 3, 5)] == [Fraction(1, 2), 0, 36]
    assert [deriv_at_zero("sn2/(cd2*sd(2u))", k, "3/10") for k in (1, 3, 5)] == [
        Fraction(1, 2), Fraction(8, 5), Fraction(1028, 25)]
    with pytest.raises(DomainError):
        deriv_at_zero("sn/cd", 2, "1/2")


def test_table_dump_lists_all_kinds():
    text = table_dump(6)
    for kind in ('"S"', '"A"', '"P"', '"q"'):
        assert kind in text


poly_st = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=12), max_size=6).map(PolyQ)


@given(poly_st, poly_st, poly_st)
def test_polynomial_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == PolyQ()


@given(poly_st, poly_st)
def test_product_rule(a, b):
    assert (a * b).deriv() == a.deriv() * b + a * b.deriv()


@settings(max_examples=40)
@given(poly_st, st.fractions(min_value=-3, max_value=3, max_denominator=10))
def test_horner_matches_power_sum(p, x):
    assert p(x) == sum((c * x ** k for k, c in enumerate(p.coeffs)), Fraction(0))
