"""Exact constructors: products, theta series, Lambert sums, eta."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from thetaq.arith import divisor_power_sum, kronecker, rep_squares, rep_triangular
from thetaq.builders import (LambertSpec, TRIVIAL, build_eisenstein, build_eta,
                             build_lambert, build_phi_psi,
                             build_theta_bivariate, build_theta_null,
                             chi_bottom, chi_top, qpochhammer)
from thetaq.series import (LAURENT, LaurentCoeff, qs_coefficient, qs_equal,
                           qs_mul, qs_pow_int)


def test_character_values_match_kronecker():
    top = chi_top(12)
    bottom = chi_bottom(5)
    for n in range(1, 40):
        assert top.value(n) == kronecker(12, n)
        assert bottom.value(n) == kronecker(n, 5)
    assert TRIVIAL.value(17) == 1


def test_qpochhammer_is_euler_product():
    # prod (1 - q^n) = 1 - q - q^2 + q^5 + q^7 - q^12 - ...
    p = qpochhammer(F(20), 1)
    expect = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}
    for e in range(20):
        assert qs_coefficient(p, F(e)) == expect.get(e, 0)


def test_eta_pentagonal_exponents():
    eta = build_eta(F(9), F(1))
    exps = [e for e, _ in eta.terms]
    assert exps == [F(1, 24), F(25, 24), F(49, 24), F(121, 24), F(169, 24)]
    assert [c for _, c in eta.terms] == [1, -1, -1, 1, 1]


def test_eta_rescaling_stretches_exponents():
    eta5 = build_eta(F(10), F(5))
    assert eta5.terms[0][0] == F(5, 24)
    eta_half = build_eta(F(3), F(1, 2))
    assert eta_half.terms[0][0] == F(1, 48)


def test_theta_nulls_as_q_series():
    # exponents are n^2/2: the series run over the half-integer nome power
    t3 = build_theta_null(3, F(30), F(1))
    assert [e for e, _ in t3.terms][:5] == [F(0), F(1, 2), F(2), F(9, 2), F(8)]
    # at tau -> 2 tau the exponents are integers and count single squares
    t3d = build_theta_null(3, F(40), F(2))
    for n in range(40):
        assert qs_coefficient(t3d, F(n)) == rep_squares(n, 1)
    t2 = build_theta_null(2, F(10), F(1))
    # theta2 = 2 q^{1/8} (1 + q^1 + q^3 + q^6 + ...)
    assert t2.terms[0][1] == 2
    lead = t2.terms[0][0]
    assert qs_coefficient(t2, lead + 1) == 2
    assert qs_coefficient(t2, lead + 2) == 0
    t4d = build_theta_null(4, F(24), F(2))
    for n in range(24):
        sign = -1 if n % 2 else 1
        assert qs_coefficient(t4d, F(n)) == sign * rep_squares(n, 1)


def test_theta1_prime_null_is_eta_cubed():
    lhs = build_theta_null("1p", F(14), F(1))
    eta3 = qs_pow_int(build_eta(F(14), F(1)), 3)
    assert qs_equal(lhs, 2 * eta3)


def test_jacobi_quartic_relation_exact():
    o = F(25)
    t2 = qs_pow_int(build_theta_null(2, o, F(1)), 4)
    t3 = qs_pow_int(build_theta_null(3, o, F(1)), 4)
    t4 = qs_pow_int(build_theta_null(4, o, F(1)), 4)
    assert qs_equal(t3, t2 + t4)


def test_bivariate_theta_collapses_to_null():
    o = F(12)
    for j in (2, 3, 4):
        biv = build_theta_bivariate(j, o, F(1), 1, F(0))
        assert biv.kind == LAURENT
        collapsed_terms = []
        for e, c in biv.terms:
            total = sum(c.terms.values())
            if total:
                collapsed_terms.append((e, total))
        null = build_theta_null(j, o, F(1))
        assert collapsed_terms == [(e, c) for e, c in null.terms]


def test_bivariate_theta1_parity():
    # theta1 is odd: u-degrees come in (d, -d) pairs with opposite signs
    biv = build_theta_bivariate(1, F(10), F(1), 1, F(0))
    assert biv.phase == 1
    for _, c in biv.terms:
        for d, v in c.terms.items():
            assert c.terms[-d] == -v


@given(st.integers(min_value=1, max_value=60))
def test_eisenstein_l_coefficients(n):
    series = build_eisenstein("L", F(80), F(1))
    assert qs_coefficient(series, F(n)) == -24 * divisor_power_sum(n, 1)
    assert qs_coefficient(series, F(0)) == 1


def test_eisenstein_m_n_coefficients():
    m = build_eisenstein("M", F(30), F(1))
    n_ = build_eisenstein("N", F(30), F(1))
    for n in range(1, 30):
        assert qs_coefficient(m, F(n)) == 240 * divisor_power_sum(n, 3)
        assert qs_coefficient(n_, F(n)) == -504 * divisor_power_sum(n, 5)


def test_eisenstein_discriminant_is_eta_24():
    o = F(25)
    m = build_eisenstein("M", o, F(1))
    n_ = build_eisenstein("N", o, F(1))
    disc = qs_pow_int(m, 3) - qs_pow_int(n_, 2)
    eta24 = qs_pow_int(build_eta(o, F(1)), 24)
    assert qs_equal(disc, 1728 * eta24)


def test_phi_psi_counting():
    phi = build_phi_psi("phi", F(40))
    psi = build_phi_psi("psi", F(40))
    for n in range(40):
        assert qs_coefficient(phi, F(n)) == rep_squares(n, 1)
    phi2 = qs_mul(phi, phi)
    psi2 = qs_mul(psi, psi)
    for n in range(40):
        assert qs_coefficient(phi2, F(n)) == rep_squares(n, 2)
        assert qs_coefficient(psi2, F(n)) == rep_triangular(n, 2)


def test_lambert_series_is_divisor_convolution():
    # sum n q^n/(1-q^n) = sum sigma_1(m) q^m
    lam = build_lambert(LambertSpec(weight=1), F(30))
    for m in range(1, 30):
        assert qs_coefficient(lam, F(m)) == divisor_power_sum(m, 1)


def test_lambert_character_twist():
    # sum (n|3) q^n/(1-q^n) picks up chi(d) over divisors d
    lam = build_lambert(LambertSpec(character=chi_bottom(3)), F(25))
    for m in range(1, 25):
        expect = sum(kronecker(d, 3) for d in range(1, m + 1) if m % d == 0)
        assert qs_coefficient(lam, F(m)) == expect


def test_lambert_plus_denominator_sign():
    # denominator_sign=-1 means 1 + q^n downstairs
    lam = build_lambert(LambertSpec(denominator_sign=-1), F(16))
    for m in range(1, 16):
        expect = sum((-1) ** (m // d + 1) for d in range(1, m + 1) if m % d == 0)
        assert qs_coefficient(lam, F(m)) == expect


def test_builders_cache_identical_objects():
    a = build_eta(F(15), F(1))
    b = build_eta(F(15), F(1))
    assert a is b
