"""Core truncated q-series arithmetic: ring laws, inversion, formatting."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from thetaq.series import (LAURENT, LaurentCoeff, QSeries, QSeriesError,
                           format_coeff, format_exponent, qs_coefficient,
                           qs_constant, qs_equal, qs_invert, qs_monomial,
                           qs_mul, qs_mul_i, qs_one, qs_pow_int, qs_scale,
                           qs_sqrt, qs_truncate, qs_zero)

ORDER = F(12)


def _exponents():
    return st.fractions(min_value=0, max_value=8, max_denominator=4)


@st.composite
def rational_series(draw, max_terms=5):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        e = draw(_exponents())
        c = draw(st.fractions(min_value=-5, max_value=5, max_denominator=6))
        if c != 0:
            terms[e] = c
    return QSeries(sorted(terms.items()), ORDER)


@given(rational_series(), rational_series(), rational_series())
def test_ring_laws(a, b, c):
    assert qs_equal(a + (b + c), (a + b) + c)
    assert qs_equal(qs_mul(a, b), qs_mul(b, a))
    left = qs_mul(a, b + c)
    right = qs_mul(a, b) + qs_mul(a, c)
    assert qs_equal(left, right)
    assert qs_equal(a + qs_zero(ORDER), a)
    assert qs_equal(qs_mul(a, qs_one(ORDER)), a)


@given(rational_series())
def test_additive_inverse(a):
    diff = a - a
    assert not diff.terms


@given(rational_series(), st.integers(min_value=0, max_value=4))
def test_pow_matches_repeated_mul(a, n):
    by_pow = qs_pow_int(a, n)
    by_mul = qs_one(ORDER)
    for _ in range(n):
        by_mul = qs_mul(by_mul, a)
    assert qs_equal(by_pow, by_mul)


@given(rational_series())
def test_invert_roundtrip(a):
    # shift to a unit: 1 + q * a is always invertible
    unit = qs_one(ORDER) + qs_mul(qs_monomial(1, F(1), ORDER), a)
    inv = qs_invert(unit)
    prod = qs_mul(unit, inv)
    assert qs_coefficient(prod, F(0)) == 1
    for e, coeff in prod.terms:
        if e != 0:
            raise AssertionError(f"nonzero coefficient {coeff} at {e}")


def test_invert_monomial_lead_drops_order():
    # leading monomial q^2 means the reciprocal is only known to order - 4
    a = qs_monomial(2, F(3), F(10)) + qs_monomial(5, F(1), F(10))
    inv = qs_invert(a)
    assert inv.trunc_order == F(10) - 2 * 2
    assert inv.terms[0] == (F(-2), F(1, 3))
    prod = qs_mul(a, inv)
    assert qs_coefficient(prod, F(0)) == 1


def test_invert_rejects_zero_and_nonmonomial_lead():
    with pytest.raises(QSeriesError):
        qs_invert(qs_zero(ORDER))


def test_sqrt_roundtrip():
    base = qs_one(ORDER) + qs_monomial(1, F(2), ORDER) - qs_monomial(3, F(1, 2), ORDER)
    square = qs_mul(base, base)
    root = qs_sqrt(square)
    assert qs_equal(root, qs_truncate(base, root.trunc_order))


def test_sqrt_even_monomial_lead():
    a = qs_monomial(4, F(9), F(20)) + qs_monomial(6, F(9), F(20))
    root = qs_sqrt(a)
    assert root.terms[0] == (F(2), F(3))
    assert qs_equal(qs_mul(root, root), qs_truncate(a, qs_mul(root, root).trunc_order))


def test_coefficient_access_and_bounds():
    a = qs_monomial(F(1, 2), F(7), F(5))
    assert qs_coefficient(a, F(1, 2)) == 7
    assert qs_coefficient(a, F(3)) == 0
    with pytest.raises(QSeriesError):
        qs_coefficient(a, F(5))
    with pytest.raises(QSeriesError):
        qs_coefficient(a, F(6))


def test_truncate_tightens_only():
    a = qs_monomial(1, F(1), F(10)) + qs_monomial(7, F(2), F(10))
    t = qs_truncate(a, F(4))
    assert t.trunc_order == F(4)
    assert [e for e, _ in t.terms] == [F(1)]


def test_scale_and_neg():
    a = qs_monomial(1, F(3), ORDER)
    assert qs_scale(a, F(2, 3)).terms[0][1] == 2
    assert (-a).terms[0][1] == -3
    assert not qs_scale(a, 0).terms


def test_phase_i_folding():
    a = qs_one(ORDER)
    b = qs_mul_i(a)      # i = (-1) * (-i)
    assert b.phase == 1
    assert b.terms[0][1] == -1
    c = qs_mul_i(b)      # i * i = -1, phase folds back to 0
    assert c.phase == 0
    assert c.terms[0][1] == -1
    d = qs_mul_i(a, 4)
    assert qs_equal(d, a)


def test_add_rejects_mixed_phase():
    a = qs_one(ORDER)
    with pytest.raises(QSeriesError):
        a + qs_mul_i(a)


def test_laurent_promotion_on_add():
    # rational + laurent promotes automatically
    lc = LaurentCoeff.monomial(2, 1) + LaurentCoeff.monomial(-2, 1)
    a = qs_monomial(1, lc, ORDER, kind=LAURENT)
    s = a + qs_one(ORDER)
    assert s.kind == LAURENT
    assert qs_coefficient(s, F(0)) == LaurentCoeff.constant(1)


def test_equality_reports_first_mismatch():
    a = qs_monomial(1, F(1), ORDER) + qs_monomial(3, F(4), ORDER)
    b = qs_monomial(1, F(1), ORDER) + qs_monomial(3, F(5), ORDER)
    res = qs_equal(a, b)
    assert not res
    assert res.mismatch_exponent == 3
    assert res.lhs_coeff == 4
    assert res.rhs_coeff == 5
    # comparison happens on the overlap of the two truncation windows
    assert res.compared_order == ORDER


def test_equal_respects_overlap_window():
    a = qs_monomial(1, F(1), F(4))
    b = qs_monomial(1, F(1), F(9)) + qs_monomial(6, F(2), F(9))
    res = qs_equal(a, b)
    assert res
    assert res.compared_order == F(4)


def test_formatting():
    assert format_exponent(F(3)) == "3"
    assert format_exponent(F(1, 24)) == "1/24"
    assert format_coeff(F(-7)) == "-7"
    assert format_coeff(F(2, 3)) == "2/3"
