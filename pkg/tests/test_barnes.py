from math import factorial

import mpmath
import pytest

from berndt import reference
from berndt.barnes import (
    BarnesParams, DivergenceError, GeometryError, barnes_via_laplace, barnes_zeta, bi_params,
    c4_params, verify_bi_relation, verify_thm72,
)
from berndt.closedform import berndt_closed_form
from berndt.mpcore import DomainError, expr_eval, working_context
from berndt.quad import integrate_mixed

SQRT2 = 2 ** 0.5
PREC = 30


def test_riemann_reduction():
    ctx = working_context(PREC)
    r = barnes_zeta(BarnesParams(1, 2, 1, (1,), (1,)), PREC)
    assert r.certified and abs(r.value - ctx.pi ** 2 / 6) < ctx.mpf(10) ** -25


def test_alternating_harmonic():
    ctx = working_context(PREC)
    r = barnes_zeta(BarnesParams(1, 1, 1, (1,), (-1,)), PREC)
    assert abs(r.value - ctx.log(2)) < ctx.mpf(10) ** -25


def test_hurwitz_shift():
    ctx = working_context(PREC)
    r = barnes_zeta(BarnesParams(1, 3, "1/2", (1,), (1,)), PREC)
    assert abs(r.value - 7 * ctx.zeta(3)) < ctx.mpf(10) ** -25


def test_laplace_riemann():
    ctx = working_context(PREC)
    r = barnes_via_laplace(BarnesParams(1, 2, 1, (1,), (1,)), PREC)
    assert abs(r.value - ctx.pi ** 2 / 6) < ctx.mpf(10) ** -25


def test_two_dimensional_closed_case():
    # zeta_2(s, 1 | 1, 1) = zeta(s-1) + ... sum (n+1) (n+1)^-s = zeta(s-1)
    ctx = working_context(PREC)
    r = barnes_zeta(BarnesParams(2, 4, 1, (1, 1), (1, 1)), PREC, shells=200)
    lap = barnes_via_laplace(BarnesParams(2, 4, 1, (1, 1), (1, 1)), PREC)
    assert abs(lap.value - ctx.zeta(3)) < ctx.mpf(10) ** -25
    assert abs(r.value - ctx.zeta(3)) <= r.error_bound


def test_gates():
    with pytest.raises(DivergenceError):
        barnes_zeta(BarnesParams(2, 2, 1, (1, 2), (1, 1)), PREC)
    # all-alternating relaxes the gate by one
    barnes_zeta(BarnesParams(2, "3/2", 1, (1, 2), (-1, -1)), 10, max_terms=50)
    with pytest.raises(DivergenceError):
        barnes_zeta(BarnesParams(2, "3/2", 1, (1, 2), (1, -1)), 10)
    with pytest.raises(GeometryError):
        BarnesParams(1, 2, 1, (1j,), (1,))
    with pytest.raises(GeometryError):
        BarnesParams(1, 2, -1, (1,), (1,))
    with pytest.raises(DomainError):
        BarnesParams(2, 3, 1, (1,), (1,))
    with pytest.raises(DomainError):
        c4_params(1)


def test_conjugate_closure_flag():
    assert c4_params(2).conjugate_closed
    assert bi_params("+", 3, 2).conjugate_closed
    assert not BarnesParams(2, 3, 1, (1 + 1j, 1 - 1j), (1, -1)).conjugate_closed
    assert not BarnesParams(1, 3, 1, (1 + 1j,), (1,)).conjugate_closed


def test_reality():
    z = barnes_via_laplace(c4_params(2), PREC).value
    assert isinstance(z, mpmath.mpf().__class__) or mpmath.im(z) == 0
    w = barnes_via_laplace(BarnesParams(1, 3, 1, (1 + 1j,), (1,)), PREC).value
    assert abs(mpmath.im(w)) > 0.01


SHELL_CASES = [
    BarnesParams(2, 4, 1, (1, SQRT2), (1, 1)),
    BarnesParams(2, 3, "1/2", (1 + 1j, 1 - 1j), (-1, -1)),
]


@pytest.mark.parametrize("params", SHELL_CASES)
@pytest.mark.parametrize("T", [50, 100])
def test_shell_tail_dominates(params, T):
    a = barnes_zeta(params, PREC, shells=T)
    b = barnes_zeta(params, PREC, shells=2 * T)
    assert abs(a.value - b.value) <= a.error_bound


def test_shell_tail_three_axes():
    p = BarnesParams(3, 5, 1, (1, 2, 3), (1, 1, 1))
    a = barnes_zeta(p, PREC, shells=50)
    b = barnes_zeta(p, PREC, shells=100)
    assert abs(a.value - b.value) <= a.error_bound


@pytest.mark.parametrize("params", SHELL_CASES + [BarnesParams(2, 3, 1, (1 + 1j, 1 - 1j), (1, -1))])
def test_routes_agree(params):
    lat = barnes_zeta(params, PREC, shells=100)
    lap = barnes_via_laplace(params, PREC)
    assert abs(lat.value - lap.value) <= lat.error_bound + lap.error_bound


def test_c4_routes_agree_within_bounds():
    lat = barnes_zeta(c4_params(2), PREC, max_terms=1500)
    lap = barnes_via_laplace(c4_params(2), PREC)
    assert not lat.certified
    assert abs(lat.value - lap.value) <= lat.error_bound + lap.error_bound


def test_c4_lattice_against_published_value():
    # the direct lattice oracle, as asked for, at 1e-12
    lat = barnes_zeta(c4_params(2), PREC, max_terms=3000)
    want = expr_eval(reference.barnes_c4(2), PREC)
    assert abs(lat.value - want) < mpmath.mpf(10) ** -12


def test_c4_laplace_equals_mixed_integral():
    z = barnes_via_laplace(c4_params(2), 40).value
    assert abs(z - integrate_mixed(5, 40).value / (4 * factorial(5))) < mpmath.mpf(10) ** -25


def test_c4_closed_form():
    z = barnes_via_laplace(c4_params(2), 40).value
    assert abs(4 * factorial(5) * z - expr_eval(berndt_closed_form(2), 40)) < mpmath.mpf(10) ** -25


def test_bridge_residual():
    assert verify_thm72(2, PREC) < mpmath.mpf(10) ** -25


@pytest.mark.parametrize("sign,s,m", [("-", 5, 2), ("+", 2, 1), ("+", 3, 2), ("-", 4, 1)])
def test_berndt_integrals_as_barnes_values(sign, s, m):
    assert verify_bi_relation(sign, s, m, PREC) < mpmath.mpf(10) ** -25
