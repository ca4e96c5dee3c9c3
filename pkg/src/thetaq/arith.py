"""Independent arithmetic oracles.

Everything in this module is deliberately self-contained: no imports from the
series engine, so these routines can serve as a second opinion when checking
coefficient identities. Implementations favour obviously-correct elementary
algorithms (trial division, schoolbook convolution) over clever ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt


# ---- Kronecker symbol ----

def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for all integers n.

    Extends the Jacobi symbol by the usual supplements at 2, -1 and 0.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # factor out twos from n; (a|2) = 0, 1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            sign = -sign
    a %= n
    # standard Jacobi loop with quadratic reciprocity
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


# ---- Bernoulli numbers ----

@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k (B_1 = -1/2) via the defining recurrence.

    sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
    """
    if k < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(-1, 2)
    if k % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(k):
        acc += comb(k + 1, j) * bernoulli(j)
    return -acc / (k + 1)


# ---- Divisor counting ----

def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, by trial division."""
    if n < 1:
        raise ValueError("need n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]

def divisor_class_count(n: int, k: int, modulus: int) -> int:
    """Number of positive divisors of n congruent to k mod modulus."""
    if modulus < 1:
        raise ValueError("need modulus >= 1")
    k %= modulus
    return sum(1 for d in divisors(n) if d % modulus == k)

def divisor_power_sum(n: int, s: int) -> int:
    """sigma_s(n): sum of d^s over positive divisors d of n."""
    return sum(d ** s for d in divisors(n))


# ---- Representation counts ----

def _r1_array(bound: int) -> list[int]:
    # representations of m as a single square, counting n and -n
    arr = [0] * (bound + 1)
    arr[0] = 1
    n = 1
    while n * n <= bound:
        arr[n * n] = 2
        n += 1
    return arr

def _t1_array(bound: int) -> list[int]:
    # representations of m as a single triangular number n(n+1)/2, n >= 0
    arr = [0] * (bound + 1)
    n = 0
    while n * (n + 1) // 2 <= bound:
        arr[n * (n + 1) // 2] += 1
        n += 1
    return arr

def _convolve(a: list[int], b: list[int], bound: int) -> list[int]:
    out = [0] * (bound + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > bound:
            continue
        for j in range(min(len(b), bound - i + 1)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out

_REP_BOUND = 1000

@lru_cache(maxsize=None)
def _rep_array(kind: str, k: int) -> tuple[int, ...]:
    # computed once per (kind, k) at the full supported bound
    base = _r1_array(_REP_BOUND) if kind == "square" else _t1_array(_REP_BOUND)
    acc = [1] + [0] * _REP_BOUND
    for _ in range(k):
        acc = _convolve(acc, base, _REP_BOUND)
    return tuple(acc)

def rep_squares(n: int, k: int) -> int:
    """r_k(n): representations of n as an ordered sum of k signed squares.

    Direct nested enumeration for k <= 4, convolution of one-square arrays
    above that. Supported for n <= 1000, k <= 8.
    """
    _check_rep_args(n, k)
    if k <= 4:
        return _rep_squares_enum(n, k)
    return _rep_array("square", k)[n]

def _rep_squares_enum(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    count = 0
    r = isqrt(n)
    for a in range(-r, r + 1):
        rem = n - a * a
        if rem >= 0:
            count += _rep_squares_enum(rem, k - 1)
    return count

def rep_triangular(n: int, k: int) -> int:
    """t_k(n): representations of n as an ordered sum of k triangular numbers."""
    _check_rep_args(n, k)
    if k <= 4:
        return _rep_triangular_enum(n, k)
    return _rep_array("tri", k)[n]

def _rep_triangular_enum(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    count = 0
    a = 0
    while a * (a + 1) // 2 <= n:
        count += _rep_triangular_enum(n - a * (a + 1) // 2, k - 1)
        a += 1
    return count

def _check_rep_args(n: int, k: int) -> None:
    if not (0 <= n <= 1000):
        raise ValueError("representation counts supported for 0 <= n <= 1000")
    if not (0 <= k <= 8):
        raise ValueError("representation counts supported for 0 <= k <= 8")


# ---- Dense integer polynomials ----

@dataclass(frozen=True)
class DensePoly:
    """Truncated power series with contiguous integer coefficients.

    coeffs[i] is the coefficient of x^i; order is the exclusive truncation
    bound. A deliberately separate code path from the sparse series engine.
    """
    coeffs: tuple[int, ...]
    order: int

    @staticmethod
    def from_list(coeffs: list[int], order: int | None = None) -> "DensePoly":
        if order is None:
            order = len(coeffs)
        return DensePoly(tuple(coeffs[:order]) + (0,) * max(0, order - len(coeffs)), order)

    def coefficient(self, i: int) -> int:
        if not (0 <= i < self.order):
            raise IndexError("coefficient index outside truncation order")
        return self.coeffs[i]

def oracle_poly_mul(a: DensePoly, b: DensePoly) -> DensePoly:
    """Schoolbook product, truncated to min(a.order, b.order)."""
    order = min(a.order, b.order)
    out = [0] * order
    for i, ai in enumerate(a.coeffs[:order]):
        if ai == 0:
            continue
        for j in range(min(b.order, order - i)):
            bj = b.coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return DensePoly(tuple(out), order)
