"""Double-precision numeric evaluation of the same special functions.

This engine is entirely separate from the exact series engine: it sums
convergent expansions in the complex plane. Fractional powers of the nome are
never taken through complex root functions; every q^r with rational r goes
through nv_qpow, which exponentiates 2*pi*i*tau*r directly and is therefore
single valued. The one genuine square root (in the imaginary transformation
constants) is sqrt(-i*tau), principal branch, which equals +1 at tau = i.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction


class NumericError(ValueError):
    pass


@dataclass(frozen=True)
class EvalPoint:
    z: complex
    tau: complex


@dataclass(frozen=True)
class EvalConfig:
    term_cap: int = 200           # hard bound on summed terms
    term_tolerance: float = 1e-18 # relative early-stop threshold
    comparison_tolerance: float = 1e-9
    lattice_margin: float = 0.15  # keep z this far from relevant lattice points
    seed: int = 42

    def __post_init__(self):
        if self.term_cap < 16:
            raise NumericError("term_cap must be at least 16")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class HalfPeriodValues:
    e1: complex
    e2: complex
    e3: complex


def _check_tau(tau: complex) -> None:
    if tau.imag <= 0:
        raise NumericError("tau must lie in the upper half plane")


def nv_qpow(tau: complex, r) -> complex:
    """q^r = exp(2*pi*i*tau*r) for rational (or real) r; single valued."""
    _check_tau(tau)
    return cmath.exp(2j * cmath.pi * complex(tau) * float(r))


def _sum_terms(terms, config: EvalConfig, scale_hint: float = 1.0) -> complex:
    """Sum a term generator with relative early stopping.

    Stops once three consecutive terms are below term_tolerance relative to
    the running magnitude; raises if term_cap is hit first.
    """
    total = 0.0 + 0.0j
    biggest = scale_hint
    small_run = 0
    for count, t in enumerate(terms):
        if count >= config.term_cap:
            raise NumericError("series did not converge within term_cap terms")
        total += t
        mag = abs(t)
        if mag > biggest:
            biggest = mag
        if mag <= config.term_tolerance * biggest:
            small_run += 1
            if small_run >= 3:
                return total
        else:
            small_run = 0
    return total


def _theta12_margin_ok(z: complex, tau: complex) -> bool:
    # terms of theta_1/theta_2 decay like q^{n^2/2} e^{-(2n+1) Im z}; demand a
    # 10% safety factor inside the strip |Im z| < pi Im(tau) / 2
    return abs(z.imag) < math.pi * tau.imag * 0.5 * 0.9


def nv_theta(j: int, point: EvalPoint, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """theta_j(z|tau) by its defining trigonometric series."""
    z, tau = complex(point.z), complex(point.tau)
    _check_tau(tau)
    if j in (1, 2) and not _theta12_margin_ok(z, tau):
        raise NumericError("Im z too large relative to Im tau for theta_1/theta_2 series")

    if j == 1:
        def gen():
            for n in range(config.term_cap + 1):
                yield 2 * (-1) ** n * nv_qpow(tau, Fraction((2 * n + 1) ** 2, 8)) \
                    * cmath.sin((2 * n + 1) * z)
        return _sum_terms(gen(), config)
    if j == 2:
        def gen():
            for n in range(config.term_cap + 1):
                yield 2 * nv_qpow(tau, Fraction((2 * n + 1) ** 2, 8)) \
                    * cmath.cos((2 * n + 1) * z)
        return _sum_terms(gen(), config)
    if j in (3, 4):
        sign = -1 if j == 4 else 1
        def gen():
            yield 1.0 + 0j
            for n in range(1, config.term_cap + 1):
                yield 2 * sign ** n * nv_qpow(tau, Fraction(n * n, 2)) * cmath.cos(2 * n * z)
        return _sum_terms(gen(), config)
    raise NumericError(f"unknown theta index {j!r}")


def nv_eta(tau: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Dedekind eta: q^{1/24} prod (1 - q^n)."""
    _check_tau(tau)
    q = nv_qpow(tau, 1)
    prod = 1.0 + 0j
    qn = 1.0 + 0j
    for n in range(1, config.term_cap + 1):
        qn *= q
        prod *= 1 - qn
        if abs(qn) < config.term_tolerance:
            break
    else:
        raise NumericError("eta product did not converge within term_cap factors")
    return nv_qpow(tau, Fraction(1, 24)) * prod


def nv_theta1_prime0(tau: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """theta_1'(0|tau) = 2 eta(tau)^3."""
    return 2 * nv_eta(tau, config) ** 3


# ---- logarithmic derivatives ----

def _theta_zero_offset(j: int) -> tuple[Fraction, Fraction]:
    # zero of theta_j at off1*pi + off2*pi*tau modulo the lattice
    return {1: (Fraction(0), Fraction(0)), 2: (Fraction(1, 2), Fraction(0)),
            3: (Fraction(1, 2), Fraction(1, 2)), 4: (Fraction(0), Fraction(1, 2))}[j]


def theta_zero_distance(j: int, z: complex, tau: complex) -> float:
    """Distance from z to the zero set of theta_j, {off + pi m + pi tau n}."""
    o1, o2 = _theta_zero_offset(j)
    w = z - math.pi * float(o1) - cmath.pi * tau * float(o2)
    # reduce w over the lattice pi Z + pi tau Z by rounding coordinates
    b = math.pi * tau
    n = round(w.imag / b.imag)
    w -= n * b
    m = round(w.real / math.pi)
    w -= m * math.pi
    best = float("inf")
    for dm in (-1, 0, 1):
        for dn in (-1, 0, 1):
            best = min(best, abs(w - dm * math.pi - dn * b))
    return best


def nv_logdtheta(j: int, order: int, point: EvalPoint,
                 config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """order-th z-derivative of log theta_j, for order in 1..4.

    The trigonometric series for (log theta_j)' is differentiated termwise;
    the cot/tan principal part is differentiated in closed form.
    """
    z, tau = complex(point.z), complex(point.tau)
    _check_tau(tau)
    if order not in (1, 2, 3, 4):
        raise NumericError("log-derivative order must be 1..4")
    if theta_zero_distance(j, z, tau) < config.lattice_margin:
        raise NumericError("z is within lattice_margin of a theta zero")

    # principal part: derivatives of cot z (j=1) or -tan z (j=2)
    if j == 1:
        c = cmath.cos(z) / cmath.sin(z)
        head = [c, -(1 + c * c), 2 * c * (1 + c * c),
                -2 * (1 + c * c) * (1 + 3 * c * c)][order - 1]
    elif j == 2:
        t = cmath.tan(z)
        head = [-t, -(1 + t * t), -2 * t * (1 + t * t),
                -2 * (1 + t * t) * (1 + 3 * t * t)][order - 1]
    else:
        head = 0.0 + 0j

    q = nv_qpow(tau, 1)

    def coefficient(n: int) -> complex:
        qn = q ** n
        if j == 1:
            return qn / (1 - qn)
        if j == 2:
            return (-1) ** n * qn / (1 - qn)
        half = nv_qpow(tau, Fraction(n, 2))
        if j == 3:
            return (-1) ** n * half / (1 - qn)
        return half / (1 - qn)

    # d^{k}/dz^{k} sin(2nz) cycles through sin, cos, -sin, -cos with (2n)^k
    k = order - 1
    trig = [cmath.sin, cmath.cos, lambda w: -cmath.sin(w), lambda w: -cmath.cos(w)][k % 4]

    def gen():
        for n in range(1, config.term_cap + 1):
            yield 4 * coefficient(n) * (2 * n) ** k * trig(2 * n * z)

    return head + _sum_terms(gen(), config, scale_hint=max(1.0, abs(head)))


# ---- Eisenstein series ----

def nv_eisenstein(which: str, tau: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """L, M, N (weights 2, 4, 6) as Lambert sums."""
    _check_tau(tau)
    weight, front = {"L": (1, -24), "M": (3, 240), "N": (5, -504)}[which]
    q = nv_qpow(tau, 1)

    def gen():
        for n in range(1, config.term_cap + 1):
            qn = q ** n
            yield front * n ** weight * qn / (1 - qn)

    return 1 + _sum_terms(gen(), config)


# ---- Weierstrass functions ----

def nv_wp(point: EvalPoint, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """wp(z|tau) = -(log theta_1)''(z|tau) - L(tau)/3."""
    return -nv_logdtheta(1, 2, point, config) - nv_eisenstein("L", point.tau, config) / 3


def nv_wp_prime(point: EvalPoint, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """wp'(z|tau) = -(log theta_1)'''(z|tau)."""
    return -nv_logdtheta(1, 3, point, config)


def nv_half_periods(tau: complex, config: EvalConfig = DEFAULT_CONFIG) -> HalfPeriodValues:
    """wp at the three half periods pi/2, pi tau/2, (pi + pi tau)/2."""
    _check_tau(tau)
    e1 = nv_wp(EvalPoint(math.pi / 2, tau), config)
    e2 = nv_wp(EvalPoint(cmath.pi * tau / 2, tau), config)
    e3 = nv_wp(EvalPoint((math.pi + cmath.pi * tau) / 2, tau), config)
    return HalfPeriodValues(e1, e2, e3)


# ---- Rogers-Ramanujan continued fraction ----

def nv_rrcf(tau: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """R(tau) = q^{1/5} prod (1-q^{5n-1})(1-q^{5n-4}) / ((1-q^{5n-2})(1-q^{5n-3}))."""
    _check_tau(tau)
    q = nv_qpow(tau, 1)
    prod = 1.0 + 0j
    for n in range(1, config.term_cap + 1):
        q5 = q ** (5 * n)
        prod *= (1 - q5 / q) * (1 - q5 / q ** 4) / ((1 - q5 / q ** 2) * (1 - q5 / q ** 3))
        if abs(q5) < config.term_tolerance:
            break
    else:
        raise NumericError("continued-fraction product did not converge")
    return nv_qpow(tau, Fraction(1, 5)) * prod


# ---- the weight-one series a(tau) ----

def nv_glaisher_a(tau: complex, config: EvalConfig = DEFAULT_CONFIG,
                  form: str = "lambert") -> complex:
    """a(tau) = 1 + 6 sum (n|3) q^n/(1-q^n), with two alternative
    representations through (log theta_1)' used as cross-checks:
    "theta": sqrt(3) (log theta_1)'(pi/3|tau) -- the sqrt(3) is real;
    "shifted": -2 + 3i (log theta_1)'(pi tau|3 tau)."""
    _check_tau(tau)
    if form == "lambert":
        q = nv_qpow(tau, 1)

        def gen():
            for n in range(1, config.term_cap + 1):
                kn = [0, 1, -1][n % 3]
                if kn == 0:
                    continue
                qn = q ** n
                yield 6 * kn * qn / (1 - qn)

        return 1 + _sum_terms(gen(), config)
    if form == "theta":
        return math.sqrt(3.0) * nv_logdtheta(1, 1, EvalPoint(math.pi / 3, tau), config)
    if form == "shifted":
        return -2 + 3j * nv_logdtheta(1, 1, EvalPoint(cmath.pi * tau, 3 * tau), config)
    raise NumericError(f"unknown form {form!r}")


# ---- modular transformation constant ----

def nv_sqrt_minus_i_tau(tau: complex) -> complex:
    """Principal sqrt(-i tau); equals +1 at tau = i."""
    _check_tau(tau)
    return cmath.sqrt(-1j * tau)
