"""Number-theoretic helpers: symbols, divisor sums, representation counts."""

import math

import pytest
from hypothesis import given, strategies as st

from thetaq.arith import (DensePoly, divisor_power_sum, divisors, kronecker,
                          oracle_poly_mul, rep_squares, rep_triangular)


def test_kronecker_legendre_on_small_primes():
    # quadratic residues mod 5 are {1, 4}
    assert [kronecker(h, 5) for h in range(5)] == [0, 1, -1, -1, 1]
    # mod 13: squares are {1,3,4,9,10,12}
    squares = {pow(x, 2, 13) for x in range(1, 13)}
    for h in range(1, 13):
        assert kronecker(h, 13) == (1 if h in squares else -1)


def test_kronecker_extended_cases():
    assert kronecker(0, 1) == 1
    assert kronecker(2, 0) == 0
    assert kronecker(1, 0) == 1
    # (a|2) has period 8 in a
    assert [kronecker(a, 2) for a in range(9)] == [0, 1, 0, -1, 0, -1, 0, 1, 0]
    # (-1|n) for odd n depends on n mod 4
    assert kronecker(-1, 5) == 1
    assert kronecker(-1, 7) == -1


@given(st.integers(min_value=-60, max_value=60),
       st.integers(min_value=-60, max_value=60),
       st.integers(min_value=1, max_value=60))
def test_kronecker_multiplicative_in_top(a, b, n):
    assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


@given(st.integers(min_value=1, max_value=400))
def test_divisor_sum_matches_enumeration(n):
    ds = divisors(n)
    assert all(n % d == 0 for d in ds)
    assert divisor_power_sum(n, 1) == sum(ds)
    assert divisor_power_sum(n, 3) == sum(d ** 3 for d in ds)
    assert divisor_power_sum(n, 0) == len(ds)


def test_rep_squares_small_table():
    # r2: 1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8 for n = 0..10
    got = [rep_squares(n, 2) for n in range(11)]
    assert got == [1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8]
    # every integer is a sum of four squares
    assert all(rep_squares(n, 4) > 0 for n in range(1, 60))


def test_rep_squares_brute_force_cross_check():
    limit = 40
    for n in range(limit):
        bound = int(math.isqrt(n))
        brute = sum(1 for x in range(-bound, bound + 1)
                    for y in range(-bound, bound + 1) if x * x + y * y == n)
        assert rep_squares(n, 2) == brute


def test_rep_triangular_small_table():
    tri = [k * (k + 1) // 2 for k in range(30)]
    for n in range(25):
        brute = sum(1 for a in tri for b in tri if a + b == n)
        assert rep_triangular(n, 2) == brute


def test_dense_poly_padding_and_bounds():
    p = DensePoly.from_list([1, 2], order=4)
    assert p.coeffs == (1, 2, 0, 0)
    assert p.coefficient(3) == 0
    with pytest.raises(IndexError):
        p.coefficient(4)


@given(st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=8),
       st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=8))
def test_oracle_poly_mul_matches_convolution(xs, ys):
    order = min(len(xs), len(ys))
    prod = oracle_poly_mul(DensePoly.from_list(xs), DensePoly.from_list(ys))
    for k in range(order):
        expect = sum(xs[i] * ys[k - i] for i in range(k + 1)
                     if i < len(xs) and k - i < len(ys))
        assert prod.coefficient(k) == expect
