"""Double-precision evaluation: thetas, eta, Eisenstein, wp, R, transforms."""

import cmath
import math
import random
from dataclasses import replace
from fractions import Fraction as F

import pytest

from thetaq.numeric import (DEFAULT_CONFIG, EvalConfig, EvalPoint,
                            NumericError, nv_eisenstein, nv_eta,
                            nv_glaisher_a, nv_half_periods, nv_logdtheta,
                            nv_qpow, nv_rrcf, nv_sqrt_minus_i_tau, nv_theta,
                            nv_theta1_prime0, nv_wp, nv_wp_prime,
                            theta_zero_distance)

TAU = 0.21 + 1.13j
TOL = 1e-12


def _close(a, b, tol=TOL):
    return abs(a - b) <= tol * (1 + max(abs(a), abs(b)))


def test_config_is_frozen_with_seeded_defaults():
    assert DEFAULT_CONFIG.seed == 42
    assert DEFAULT_CONFIG.comparison_tolerance == 1e-9
    with pytest.raises(Exception):
        DEFAULT_CONFIG.seed = 7
    tweaked = replace(DEFAULT_CONFIG, seed=7)
    assert tweaked.seed == 7 and DEFAULT_CONFIG.seed == 42


def test_qpow_fractional():
    v = nv_qpow(TAU, F(1, 2))
    q = cmath.exp(2j * cmath.pi * TAU)
    assert _close(v * v, q)


def test_theta_parity_and_periods():
    z = 0.31 + 0.05j
    p = lambda w: EvalPoint(w, TAU)
    assert _close(nv_theta(1, p(-z)), -nv_theta(1, p(z)))
    for j in (2, 3, 4):
        assert _close(nv_theta(j, p(-z)), nv_theta(j, p(z)))
    # pi-periodicity (up to sign for theta1/theta2)
    assert _close(nv_theta(1, p(z + math.pi)), -nv_theta(1, p(z)))
    assert _close(nv_theta(3, p(z + math.pi)), nv_theta(3, p(z)))
    # quasi-periodicity in pi*tau (theta3/theta4 only: a full pi*tau shift
    # pushes theta1/theta2 outside their convergence strip by construction)
    factor = cmath.exp(-1j * cmath.pi * TAU - 2j * z)
    assert _close(nv_theta(3, p(z + cmath.pi * TAU)), factor * nv_theta(3, p(z)))
    assert _close(nv_theta(4, p(z + cmath.pi * TAU)), -factor * nv_theta(4, p(z)))


def test_theta_half_period_ladder():
    z = 0.17 + 0.03j
    p = lambda w: EvalPoint(w, TAU)
    assert _close(nv_theta(1, p(z + math.pi / 2)), nv_theta(2, p(z)))
    assert _close(nv_theta(3, p(z + math.pi / 2)), nv_theta(4, p(z)))


def test_theta_strip_guard_raises():
    wide = EvalPoint(0.1 + 0.7j * math.pi * TAU.imag, TAU)
    with pytest.raises(NumericError):
        nv_theta(1, wide)
    # theta3/theta4 have no sine/cosine growth problem at the same height
    nv_theta(3, wide)


def test_theta1_prime_null_consistency():
    d = 2e-6
    fd = (nv_theta(1, EvalPoint(d, TAU)) - nv_theta(1, EvalPoint(-d, TAU))) / (2 * d)
    v = nv_theta1_prime0(TAU)
    assert _close(fd, v, 1e-9)
    assert _close(v, 2 * nv_eta(TAU) ** 3)
    prod = (nv_theta(2, EvalPoint(0, TAU)) * nv_theta(3, EvalPoint(0, TAU))
            * nv_theta(4, EvalPoint(0, TAU)))
    assert _close(v, prod)


def test_eta_transformation():
    # eta(-1/tau) = sqrt(-i tau) eta(tau)
    for tau in (1.3j, 0.3 + 0.9j, -0.25 + 1.7j):
        lhs = nv_eta(-1 / tau)
        rhs = nv_sqrt_minus_i_tau(tau) * nv_eta(tau)
        assert _close(lhs, rhs, 1e-11)


def test_eta_rejects_lower_half_plane():
    with pytest.raises(NumericError):
        nv_eta(0.3 - 0.5j)


def test_eisenstein_against_lambert_sums():
    q = cmath.exp(2j * cmath.pi * TAU)
    for which, weight, scale in (("L", 1, -24), ("M", 3, 240), ("N", 5, -504)):
        direct = 1 + scale * sum(n ** weight * q ** n / (1 - q ** n)
                                 for n in range(1, 200))
        assert _close(nv_eisenstein(which, TAU), direct)


def test_eisenstein_m_transformation():
    # M is weight 4: M(-1/tau) = tau^4 M(tau)
    tau = 0.1 + 1.2j
    assert _close(nv_eisenstein("M", -1 / tau), tau ** 4 * nv_eisenstein("M", tau), 1e-10)


def test_logdtheta_finite_difference():
    rng = random.Random(11)
    for _ in range(10):
        tau = complex(rng.uniform(-0.3, 0.3), rng.uniform(1.0, 1.4))
        z = complex(rng.uniform(0.2, 0.5), rng.uniform(0.0, 0.05))
        for j in (1, 2, 3, 4):
            d = 1e-6
            fd = (cmath.log(nv_theta(j, EvalPoint(z + d, tau)))
                  - cmath.log(nv_theta(j, EvalPoint(z - d, tau)))) / (2 * d)
            assert _close(nv_logdtheta(j, 1, EvalPoint(z, tau)), fd, 1e-7)


def test_logdtheta_second_order_consistency():
    z = 0.4 + 0.02j
    d = 1e-5
    g1 = lambda w: nv_logdtheta(1, 1, EvalPoint(w, TAU))
    fd = (g1(z + d) - g1(z - d)) / (2 * d)
    assert _close(nv_logdtheta(1, 2, EvalPoint(z, TAU)), fd, 1e-7)


def test_logdtheta_lattice_margin_guard():
    assert theta_zero_distance(1, 0.0, TAU) == 0.0
    with pytest.raises(NumericError):
        nv_logdtheta(1, 1, EvalPoint(0.01, TAU))


def test_wp_even_and_periodic():
    z = 0.43 + 0.06j
    assert _close(nv_wp(EvalPoint(-z, TAU)), nv_wp(EvalPoint(z, TAU)))
    assert _close(nv_wp(EvalPoint(z + math.pi, TAU)), nv_wp(EvalPoint(z, TAU)), 1e-10)


def test_wp_differential_equation():
    z = 0.38 + 0.04j
    wp = nv_wp(EvalPoint(z, TAU))
    wpp = nv_wp_prime(EvalPoint(z, TAU))
    m = nv_eisenstein("M", TAU)
    n = nv_eisenstein("N", TAU)
    lhs = wpp ** 2
    rhs = 4 * wp ** 3 - F(4, 3) * m * wp - F(8, 27) * n
    assert _close(lhs, rhs, 1e-9)


def test_wp_prime_is_derivative():
    z = 0.36 + 0.02j
    d = 1e-6
    fd = (nv_wp(EvalPoint(z + d, TAU)) - nv_wp(EvalPoint(z - d, TAU))) / (2 * d)
    assert _close(nv_wp_prime(EvalPoint(z, TAU)), fd, 1e-6)


def test_half_periods_sum_to_zero():
    hp = nv_half_periods(TAU)
    assert abs(hp.e1 + hp.e2 + hp.e3) < 1e-10
    # e-values are the roots of the wp cubic
    m = nv_eisenstein("M", TAU)
    n = nv_eisenstein("N", TAU)
    for e in (hp.e1, hp.e2, hp.e3):
        assert abs(4 * e ** 3 - F(4, 3) * m * e - F(8, 27) * n) < 1e-8


def test_rrcf_at_i():
    closed = math.sqrt((5 + math.sqrt(5)) / 2) - (1 + math.sqrt(5)) / 2
    assert abs(nv_rrcf(1j) - closed) < 1e-12


def test_glaisher_a_forms_agree():
    for tau in (1.1j, 0.2 + 1.3j):
        base = nv_glaisher_a(tau)
        assert _close(nv_glaisher_a(tau, form="theta"), base, 1e-10)
        assert _close(nv_glaisher_a(tau, form="shifted"), base, 1e-10)
    with pytest.raises(NumericError):
        nv_glaisher_a(1.2j, form="nope")


def test_term_cap_enforced():
    # slow-converging tau: tiny imaginary part with the minimum cap must raise
    cfg = replace(DEFAULT_CONFIG, term_cap=16)
    with pytest.raises(NumericError):
        nv_eta(0.002j, cfg)
    with pytest.raises(NumericError):
        EvalConfig(term_cap=3, term_tolerance=1e-18, comparison_tolerance=1e-9,
                   lattice_margin=0.15, seed=1)
