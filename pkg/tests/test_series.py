from fractions import Fraction
from math import factorial

import pytest

from gstirling.qpoly import QPolynomial
from gstirling.rationals import rising
from gstirling.series import (
    QXSeries,
    binomial_series,
    gf_polynomials,
    series_exp,
    series_mul,
    verify_gf_derivative,
)

F = Fraction
PAIRS = [
    (F("-1/2"), F("-1/2")),
    (F("-3/2"), F("-1/2")),
    (F(2), F(3)),
    (F(0), F(-1)),
    (F("1/3"), F(-2)),
]


def test_binomial_series_values():
    assert binomial_series(0, 3) == QXSeries.one(3)
    assert binomial_series(1, 2) == QXSeries(2, (1, -1, 0))
    assert binomial_series(F(1, 2), 2) == QXSeries(2, (1, F(-1, 2), F(-1, 8)))


@pytest.mark.parametrize("a", [F(1), F("-1/2"), F("7/3")])
def test_binomial_series_general_term(a):
    s = binomial_series(a, 6)
    for n in range(7):
        assert s.coeff(n) == QPolynomial.constant(rising(-a, n) / factorial(n))


def test_series_mul_identity_and_small_product():
    s = binomial_series(F("5/7"), 4)
    assert series_mul(s, QXSeries.one(4)) == s
    assert series_mul(QXSeries(1, (1, -1)), QXSeries(1, (1, 1))) == QXSeries(1, (1, 0))


@pytest.mark.parametrize("a", [F(1), F("-1/2"), F("2/3"), F(-3)])
def test_binomial_inverse_pair(a):
    prod = series_mul(binomial_series(a, 8), binomial_series(-a, 8))
    assert prod == QXSeries.one(8)


def test_series_mul_rejects_mismatched_orders():
    with pytest.raises(ValueError):
        series_mul(QXSeries.one(3), QXSeries.one(4))


def test_series_exp_values():
    assert series_exp(QXSeries.zero(4)) == QXSeries.one(4)
    x = QPolynomial.x()
    got = series_exp(QXSeries(2, (QPolynomial.zero(), x)))
    assert got == QXSeries(2, (QPolynomial.one(), x, F(1, 2) * (x * x)))


def test_series_exp_rejects_nonzero_constant_term():
    with pytest.raises(ValueError):
        series_exp(QXSeries.one(3))


def test_series_exp_is_homomorphism():
    x = QPolynomial.x()
    s1 = QXSeries(5, (QPolynomial.zero(), x, QPolynomial.constant(F(1, 3))))
    s2 = QXSeries(5, (QPolynomial.zero(), QPolynomial.constant(-2), x * x))
    assert series_exp(s1 + s2) == series_mul(series_exp(s1), series_exp(s2))


def test_exp_coefficient_matches_family_member():
    # 2! * [t^2] exp(x*((1-t)^-1 - 1)) is the degree-2 member at (0, -1)
    inner = (binomial_series(-1, 4) - QXSeries.one(4)).scale(QPolynomial.x())
    got = 2 * series_exp(inner).coeff(2)
    assert got == QPolynomial((0, 2, 1))


def test_t_derivative_drops_order():
    s = binomial_series(F(3), 4)
    d = s.t_derivative()
    assert d.order == 3
    # d/dt (1-t)^3 = -3(1-t)^2
    assert d == binomial_series(F(2), 3).scale(F(-3))


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_gf_first_members(alpha, beta):
    ps = gf_polynomials(alpha, beta, 3)
    assert ps[0] == QPolynomial.one()
    assert ps[1] == QPolynomial((-alpha, -beta))


def test_gf_collapses_at_0_1():
    ps = gf_polynomials(0, 1, 5)
    for n, p in enumerate(ps):
        assert p == QPolynomial.monomial(n, F(-1) ** n)


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_gf_degree_and_leading_coefficient(alpha, beta):
    for n, p in enumerate(gf_polynomials(alpha, beta, 8)):
        assert p.degree == n
        assert p.lead == (-beta) ** n
        assert p(0) == rising(-alpha, n)


def test_gf_rejects_zero_beta():
    with pytest.raises(ValueError):
        gf_polynomials(1, 0, 3)


def test_gf_derivative_identity_m0():
    assert verify_gf_derivative(F("2/3"), F(-2), 0, 5)


def test_gf_derivative_identity_examples():
    assert verify_gf_derivative(F("-1/2"), F("-1/2"), 3, 8)
    assert verify_gf_derivative(F(2), F(3), 2, 6)


def test_gf_derivative_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify_gf_derivative(1, 0, 1, 4)
    with pytest.raises(ValueError):
        verify_gf_derivative(1, 1, 5, 4)


def test_series_constructor_validation():
    with pytest.raises(ValueError):
        QXSeries(-1)
    with pytest.raises(ValueError):
        QXSeries(1, (1, 2, 3))
    with pytest.raises(ValueError):
        QXSeries.one(0).t_derivative()
