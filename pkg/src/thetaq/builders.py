"""Constructors for the standard q-series objects.

Every builder returns an exact truncated ``QSeries``. The ``tau_scale``
argument c builds the object at c*tau, i.e. with q replaced by q^c; builders
satisfy build(order, tau_scale=c) == qs_substitute_tau_scale(build(order/c), c)
up to truncation, which the test suite checks as an invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .arith import bernoulli, kronecker
from .series import (
    LAURENT,
    RATIONAL,
    LaurentCoeff,
    QSeries,
    QSeriesError,
    qs_mul,
    qs_one,
    qs_pow_int,
    qs_scale,
)


# ---- characters ----

@dataclass(frozen=True)
class CharacterSpec:
    """A real character given through the Kronecker symbol.

    kind "kronecker-top" with argument a is n -> (a|n); "kronecker-bottom"
    with argument m is n -> (n|m); "trivial" is constantly 1.
    """
    kind: str
    argument: int = 0

    def value(self, n: int) -> int:
        if self.kind == "kronecker-top":
            return kronecker(self.argument, n)
        if self.kind == "kronecker-bottom":
            return kronecker(n, self.argument)
        if self.kind == "trivial":
            return 1
        raise QSeriesError(f"unknown character kind {self.kind!r}")


TRIVIAL = CharacterSpec("trivial")

def chi_top(a: int) -> CharacterSpec:
    return CharacterSpec("kronecker-top", a)

def chi_bottom(m: int) -> CharacterSpec:
    return CharacterSpec("kronecker-bottom", m)


# ---- Lambert series ----

@dataclass(frozen=True)
class LambertSpec:
    """sum_{n>=1} chi(n) (-1)^n? n^weight q^{shift*n} / (1 -+ q^{scale*n}).

    denominator_sign +1 means 1 - q^{scale*n}, -1 means 1 + q^{scale*n}.
    neg_q_base replaces q by -q inside the denominator (1 -+ (-q)^{scale*n}),
    which some rearrangements need; it only changes term signs.
    """
    character: CharacterSpec = TRIVIAL
    weight: int = 0
    numerator_shift: Fraction = Fraction(1)
    denominator_scale: int = 1
    denominator_sign: int = 1
    alternating: bool = False
    neg_q_base: bool = False


@lru_cache(maxsize=None)
def _divisor_lists(bound: int) -> tuple[tuple[int, ...], ...]:
    divs: list[list[int]] = [[] for _ in range(bound + 1)]
    for d in range(1, bound + 1):
        for m in range(d, bound + 1, d):
            divs[m].append(d)
    return tuple(tuple(x) for x in divs)


def build_lambert(spec: LambertSpec, order) -> QSeries:
    """Expand a Lambert-type sum exactly by divisor convolution.

    Each term q^{cn}/(1 -+ q^{dn}) contributes to exponents n(c + dk); on the
    common-denominator grid the coefficient at a given exponent is a sum over
    divisors, which avoids any term-by-term geometric accumulation.
    """
    order = Fraction(order)
    c = Fraction(spec.numerator_shift)
    d = int(spec.denominator_scale)
    if c <= 0:
        raise QSeriesError("Lambert numerator shift must be positive")
    if d < 1:
        raise QSeriesError("Lambert denominator scale must be a positive integer")
    if spec.denominator_sign not in (1, -1):
        raise QSeriesError("denominator sign must be +1 or -1")
    # integer grid: exponent e corresponds to m = e*R with R the shift denominator
    R = c.denominator
    A = c.numerator
    B = d * R
    M = order * R
    Mi = -(-M.numerator // M.denominator)  # ceil; exclusive bound on the grid
    divs = _divisor_lists(Mi - 1) if Mi >= 1 else ((),)
    terms: dict[Fraction, Fraction] = {}
    for m in range(1, Mi):
        total = 0
        for n in divs[m]:
            t = m // n - A
            if t < 0 or t % B:
                continue
            k = t // B
            chi = spec.character.value(n)
            if chi == 0:
                continue
            val = chi * n ** spec.weight
            if spec.alternating and n % 2:
                val = -val
            if spec.denominator_sign == -1 and k % 2:
                val = -val
            if spec.neg_q_base and (d * n * k) % 2:
                val = -val
            total += val
        if total:
            terms[Fraction(m, R)] = Fraction(total)
    return QSeries(terms, order)


# ---- eta and the Euler product ----

@lru_cache(maxsize=None)
def qpochhammer(order, scale=Fraction(1)) -> QSeries:
    """prod_{n>=1} (1 - q^{scale*n}) truncated below order."""
    order = Fraction(order)
    scale = Fraction(scale)
    if scale <= 0:
        raise QSeriesError("scale must be positive")
    out = qs_one(order)
    n = 1
    while scale * n < order:
        out = qs_mul(out, QSeries({Fraction(0): 1, scale * n: -1}, order))
        n += 1
    return out


@lru_cache(maxsize=None)
def build_eta(order, tau_scale=Fraction(1)) -> QSeries:
    """Dedekind eta at tau_scale * tau: q^{c/24} prod (1 - q^{cn})."""
    order = Fraction(order)
    c = Fraction(tau_scale)
    if c <= 0:
        raise QSeriesError("tau scale must be positive")
    shift = c / 24
    body = qpochhammer(order - shift, c)
    return QSeries({e + shift: v for e, v in body.terms}, order)


@lru_cache(maxsize=None)
def prod_ap(order, stride, offset, sign=-1, power=1) -> QSeries:
    """prod_{j>=0} (1 + sign*q^{offset + j*stride})^power, offset > 0."""
    order = Fraction(order)
    stride = Fraction(stride)
    offset = Fraction(offset)
    if offset <= 0 or stride <= 0:
        raise QSeriesError("offset and stride must be positive")
    out = qs_one(order)
    e = offset
    while e < order:
        out = qs_mul(out, QSeries({Fraction(0): 1, e: sign}, order))
        e += stride
    if power != 1:
        out = qs_pow_int(out, power)
    return out


# ---- theta constants ----

@lru_cache(maxsize=None)
def build_theta_null(j, order, tau_scale=Fraction(1)) -> QSeries:
    """Theta constants theta_j(0|c*tau) for j in {2, 3, 4}, and the z-derivative
    theta_1'(0|c*tau) for j == "1p", which is returned as 2 eta(c*tau)^3."""
    order = Fraction(order)
    c = Fraction(tau_scale)
    if c <= 0:
        raise QSeriesError("tau scale must be positive")
    if j == "1p":
        return qs_scale(qs_pow_int(build_eta(order, c), 3), 2)
    terms: dict[Fraction, Fraction] = {}
    if j == 2:
        n = 0
        while (e := c * Fraction((2 * n + 1) ** 2, 8)) < order:
            terms[e] = Fraction(2)
            n += 1
    elif j in (3, 4):
        terms[Fraction(0)] = Fraction(1)
        n = 1
        while (e := c * Fraction(n * n, 2)) < order:
            terms[e] = Fraction(-2 if (j == 4 and n % 2) else 2)
            n += 1
    else:
        raise QSeriesError(f"unknown theta constant index {j!r}")
    return QSeries(terms, order)


# ---- bivariate theta series ----

def _quad_range(a: Fraction, b: Fraction, order: Fraction):
    """All integers n with a*n^2 + b*n below order (a > 0)."""
    # walk outward from the vertex; the exponent is eventually increasing
    n0 = int(-b / (2 * a)) if a != 0 else 0
    ns = []
    n = n0
    while a * n * n + b * n < order:
        ns.append(n)
        n += 1
    n = n0 - 1
    while a * n * n + b * n < order:
        ns.append(n)
        n -= 1
    return sorted(ns)


@lru_cache(maxsize=None)
def build_theta_bivariate(j, order, tau_scale=Fraction(1), z_multiplier=1,
                          q_shift=Fraction(0)) -> QSeries:
    """theta_j(m*z + r*pi*tau | c*tau) as a Laurent series in u = exp(iz).

    j in {1, 2, 3, 4}; m = z_multiplier is a nonzero integer; r = q_shift is
    rational (shifts by other amounts do not stay on the q-u grid and are
    rejected by construction). theta_1 carries the unit prefactor (-i).
    """
    order = Fraction(order)
    c = Fraction(tau_scale)
    m = int(z_multiplier)
    r = Fraction(q_shift)
    if c <= 0:
        raise QSeriesError("tau scale must be positive")
    if m == 0:
        raise QSeriesError("z multiplier must be nonzero")
    acc: dict[Fraction, LaurentCoeff] = {}

    def put(e: Fraction, deg: int, v: int) -> None:
        if e >= order:
            return
        mono = LaurentCoeff.monomial(deg, v)
        cur = acc.get(e)
        acc[e] = mono if cur is None else cur + mono

    if j in (1, 2):
        # exponent c*(2n+1)^2/8 + r*(2n+1)/2, degree m*(2n+1)
        a2, b2 = c / 2, c / 2 + r
        const = c / 8 + r / 2
        for n in _quad_range(a2, b2, order - const):
            sgn = -1 if (j == 1 and n % 2) else 1
            put(a2 * n * n + b2 * n + const, m * (2 * n + 1), sgn)
        phase = 1 if j == 1 else 0
    elif j in (3, 4):
        a2, b2 = c / 2, r
        for n in _quad_range(a2, b2, order):
            sgn = -1 if (j == 4 and n % 2) else 1
            put(a2 * n * n + b2 * n, 2 * m * n, sgn)
        phase = 0
    else:
        raise QSeriesError(f"unknown theta index {j!r}")
    return QSeries(acc, order, LAURENT, phase=phase)


# ---- Eisenstein series ----

@lru_cache(maxsize=None)
def _sigma_table(s: int, bound: int) -> tuple[int, ...]:
    table = [0] * (bound + 1)
    for d in range(1, bound + 1):
        ds = d ** s
        for mm in range(d, bound + 1, d):
            table[mm] += ds
    return tuple(table)


@lru_cache(maxsize=None)
def build_eisenstein(which, order, tau_scale=Fraction(1)) -> QSeries:
    """Eisenstein series at c*tau. which is "L", "M", "N" (weights 2, 4, 6)
    or "E2k" for even weight 2k <= 30: E_2k = 1 - (4k/B_2k) sum sigma_{2k-1}(n) q^n."""
    order = Fraction(order)
    c = Fraction(tau_scale)
    if c <= 0:
        raise QSeriesError("tau scale must be positive")
    names = {"L": 2, "M": 4, "N": 6}
    if which in names:
        k2 = names[which]
    else:
        if not (isinstance(which, str) and which.startswith("E")):
            raise QSeriesError(f"unknown Eisenstein series {which!r}")
        k2 = int(which[1:])
        if k2 % 2 or not (2 <= k2 <= 30):
            raise QSeriesError("Eisenstein weight must be even and at most 30")
    k = k2 // 2
    front = Fraction(-4 * k) / bernoulli(k2)
    bound = int(order / c) + 1
    sig = _sigma_table(k2 - 1, bound)
    terms: dict[Fraction, Fraction] = {Fraction(0): Fraction(1)}
    for n in range(1, bound + 1):
        e = c * n
        if e < order:
            terms[e] = front * sig[n]
    return QSeries(terms, order)


# ---- phi and psi ----

@lru_cache(maxsize=None)
def build_phi_psi(which, order, q_scale=Fraction(1)) -> QSeries:
    """phi: sum over all integers of q^{s n^2}; psi: sum_{n>=0} q^{s n(n+1)/2}."""
    order = Fraction(order)
    s = Fraction(q_scale)
    if s <= 0:
        raise QSeriesError("q scale must be positive")
    terms: dict[Fraction, Fraction] = {}
    if which == "phi":
        terms[Fraction(0)] = Fraction(1)
        n = 1
        while (e := s * n * n) < order:
            terms[e] = Fraction(2)
            n += 1
    elif which == "psi":
        n = 0
        while (e := s * Fraction(n * (n + 1), 2)) < order:
            terms[e] = terms.get(e, Fraction(0)) + 1
            n += 1
    else:
        raise QSeriesError(f"unknown series {which!r}")
    return QSeries(terms, order)
