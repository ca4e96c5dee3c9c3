"""Identity registry: record and verdict types, deterministic parameter
sampling, and the verification engine shared by the library and the CLI.

Records come in four modes. Exact modes expand both sides as truncated
q-series over Q and compare coefficients; Numeric mode evaluates both sides
in double precision at seeded sample points; Arithmetic mode compares
integer sequences produced by independent oracles.
"""

from __future__ import annotations

import cmath
import math
import random
import time
import zlib
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Sequence

from .numeric import (DEFAULT_CONFIG, EvalConfig, EvalPoint, NumericError,
                      nv_eisenstein, nv_logdtheta, nv_qpow, nv_theta,
                      nv_theta1_prime0)
from .series import QSeries, QSeriesError, format_coeff, format_exponent, qs_equal

EXACT_Q = "ExactQ"
EXACT_BIVARIATE = "ExactBivariate"
NUMERIC = "Numeric"
ARITHMETIC = "Arithmetic"
MODES = (EXACT_Q, EXACT_BIVARIATE, NUMERIC, ARITHMETIC)

# mode tags as they appear in persisted reports
REPORT_MODE = {
    EXACT_Q: "exact-q",
    EXACT_BIVARIATE: "exact-bivariate",
    NUMERIC: "numeric",
    ARITHMETIC: "arithmetic",
}

DEFAULT_EXACT_ORDER = Fraction(30)
DEFAULT_BIVARIATE_ORDER = Fraction(25)
DEFAULT_ARITH_BOUND = 200
DEFAULT_SAMPLES = 5
MASTER_SAMPLES = 20


class RegistryError(ValueError):
    pass


# ---- deterministic parameter sampling ----

@dataclass(frozen=True)
class ParamSampler:
    """Deterministic sample generator for numeric records.

    Continuous variables are drawn as z = s*a*pi + i*b*pi*Im(tau) with
    a in z_re, |b| in z_im and a random sign s, which keeps every draw
    clear of the lattice and inside the strip where the theta_1/theta_2
    series converge. Discrete parameters are drawn from finite choice sets.
    """
    count: int = DEFAULT_SAMPLES
    variables: tuple[str, ...] = ("z",)
    tau_re: tuple[float, float] = (-0.4, 0.4)
    tau_im: tuple[float, float] = (0.9, 1.5)
    z_re: tuple[float, float] = (0.08, 0.42)
    z_im: tuple[float, float] = (0.0, 0.06)
    choices: tuple[tuple[str, tuple], ...] = ()
    seed: int | None = None

    def samples(self, seed: int, salt: str) -> list[dict]:
        if self.seed is not None:
            seed = self.seed
        rng = random.Random((seed << 24) ^ zlib.crc32(salt.encode("utf-8")))
        out = []
        for _ in range(self.count):
            tau = complex(rng.uniform(*self.tau_re), rng.uniform(*self.tau_im))
            point: dict = {"tau": tau}
            for name in self.variables:
                re = rng.choice((-1.0, 1.0)) * rng.uniform(*self.z_re) * math.pi
                im = rng.choice((-1.0, 1.0)) * rng.uniform(*self.z_im) \
                    * math.pi * tau.imag
                point[name] = complex(re, im)
            for name, opts in self.choices:
                point[name] = rng.choice(opts)
            out.append(point)
        return out


# ---- records and verdicts ----

@dataclass(frozen=True)
class IdentityRecord:
    """One verifiable identity.

    For exact modes the builders map an expansion order to a QSeries (or a
    tuple of QSeries for multi-part records). For Numeric mode they map
    (sample, config) to a complex value or tuple of values. For Arithmetic
    mode they map a bound to a sequence of integers.
    """
    id: str
    section: int
    paper_ref: str
    mode: str
    lhs_builder: Callable
    rhs_builder: Callable
    sampler: ParamSampler | None = None
    order: Fraction | int | None = None
    evidence_only: bool = False
    notes: str | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise RegistryError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class Verdict:
    id: str
    status: str                      # "pass" | "fail" | "evidence" | "error"
    mode: str
    order: Fraction | None = None
    samples: int | None = None
    max_abs_residual: float | None = None
    first_mismatch_exponent: Fraction | None = None
    lhs_coeff: str | None = None
    rhs_coeff: str | None = None
    elapsed: float = 0.0
    note: str | None = None

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "evidence")


def _as_parts(value) -> tuple:
    if isinstance(value, (tuple, list)):
        return tuple(value)
    return (value,)


def _residual(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / (1.0 + max(abs(lhs), abs(rhs)))


def _default_order(record: IdentityRecord) -> Fraction:
    if record.order is not None:
        return Fraction(record.order)
    if record.mode == EXACT_BIVARIATE:
        return DEFAULT_BIVARIATE_ORDER
    if record.mode == ARITHMETIC:
        return Fraction(DEFAULT_ARITH_BOUND)
    return DEFAULT_EXACT_ORDER


def _pass_status(record: IdentityRecord) -> str:
    return "evidence" if record.evidence_only else "pass"


def verify_record(record: IdentityRecord, *, order=None, samples: int | None = None,
                  config: EvalConfig = DEFAULT_CONFIG) -> Verdict:
    """Run one record's check and fold the outcome into a Verdict.

    Exceptions from builders are recorded as status "error" rather than
    propagated, so a sweep over the whole registry always completes.
    """
    t0 = time.perf_counter()
    try:
        if record.mode in (EXACT_Q, EXACT_BIVARIATE):
            use = Fraction(order) if order is not None else _default_order(record)
            lhs = _as_parts(record.lhs_builder(use))
            rhs = _as_parts(record.rhs_builder(use))
            if len(lhs) != len(rhs):
                raise RegistryError("side part counts differ")
            compared = None
            for k, (a, b) in enumerate(zip(lhs, rhs)):
                res = qs_equal(a, b)
                compared = res.compared_order if compared is None \
                    else min(compared, res.compared_order)
                if not res:
                    note = f"part {k + 1} of {len(lhs)}" if len(lhs) > 1 else None
                    return Verdict(
                        record.id, "fail", record.mode, order=res.compared_order,
                        first_mismatch_exponent=res.mismatch_exponent,
                        lhs_coeff=format_coeff(res.lhs_coeff),
                        rhs_coeff=format_coeff(res.rhs_coeff),
                        elapsed=time.perf_counter() - t0, note=note)
            return Verdict(record.id, _pass_status(record), record.mode,
                           order=compared, elapsed=time.perf_counter() - t0)

        if record.mode == NUMERIC:
            sampler = record.sampler or ParamSampler()
            if samples is not None:
                sampler = replace(sampler, count=samples)
            points = sampler.samples(config.seed, record.id)
            worst = 0.0
            worst_note = None
            for i, pt in enumerate(points):
                lhs = _as_parts(record.lhs_builder(pt, config))
                rhs = _as_parts(record.rhs_builder(pt, config))
                if len(lhs) != len(rhs):
                    raise RegistryError("side part counts differ")
                for k, (a, b) in enumerate(zip(lhs, rhs)):
                    r = _residual(a, b)
                    if r > worst:
                        worst = r
                        worst_note = (f"sample {i + 1} part {k + 1}"
                                      if len(lhs) > 1 else f"sample {i + 1}")
            ok = worst <= config.comparison_tolerance
            return Verdict(record.id, _pass_status(record) if ok else "fail",
                           record.mode, samples=len(points),
                           max_abs_residual=worst,
                           elapsed=time.perf_counter() - t0,
                           note=None if ok else worst_note)

        # arithmetic: integer sequences from independent oracles
        use = int(order) if order is not None else int(_default_order(record))
        lhs = list(record.lhs_builder(use))
        rhs = list(record.rhs_builder(use))
        if len(lhs) != len(rhs):
            raise RegistryError("sequence lengths differ")
        for i, (a, b) in enumerate(zip(lhs, rhs)):
            if a != b:
                return Verdict(record.id, "fail", record.mode,
                               order=Fraction(use),
                               first_mismatch_exponent=Fraction(i),
                               lhs_coeff=str(a), rhs_coeff=str(b),
                               elapsed=time.perf_counter() - t0)
        return Verdict(record.id, _pass_status(record), record.mode,
                       order=Fraction(use), elapsed=time.perf_counter() - t0)
    except Exception as exc:  # noqa: BLE001 -- verdicts must always be produced
        return Verdict(record.id, "error", record.mode,
                       elapsed=time.perf_counter() - t0,
                       note=f"{type(exc).__name__}: {exc}")


# ---- registry lookups ----

def _catalog() -> tuple[IdentityRecord, ...]:
    from . import catalog
    return catalog.all_records()


def registry_list(*, section: int | None = None, mode: str | None = None,
                  ids: Sequence[str] | None = None) -> tuple[IdentityRecord, ...]:
    """All records, optionally filtered, sorted by id. Unknown filters
    simply produce an empty tuple."""
    records = _catalog()
    if ids is not None:
        wanted = set(ids)
        records = tuple(r for r in records if r.id in wanted)
    if section is not None:
        records = tuple(r for r in records if r.section == int(section))
    if mode is not None:
        records = tuple(r for r in records if r.mode == mode)
    return tuple(sorted(records, key=lambda r: r.id))


def get_record(identity_id: str) -> IdentityRecord:
    for r in _catalog():
        if r.id == identity_id:
            return r
    raise RegistryError(f"unknown identity {identity_id!r}")


def verify_identity(identity_id: str, *, order=None, samples: int | None = None,
                    config: EvalConfig = DEFAULT_CONFIG) -> Verdict:
    return verify_record(get_record(identity_id), order=order, samples=samples,
                         config=config)


def verify_all(*, section: int | None = None, mode: str | None = None,
               ids: Sequence[str] | None = None,
               config: EvalConfig = DEFAULT_CONFIG) -> list[Verdict]:
    """Verify every matching record; failures and errors are recorded in the
    returned verdicts, never raised."""
    return [verify_record(r, config=config)
            for r in registry_list(section=section, mode=mode, ids=ids)]


# ---- persisted report ----

def build_report(verdicts: Sequence[Verdict], config: EvalConfig = DEFAULT_CONFIG,
                 order=None) -> dict:
    """Assemble the JSON-ready report structure.

    elapsed_ms is normalised to 0 so that repeated runs with the same seed
    produce byte-identical files; wall-clock noise stays out of diffs.
    """
    by_id = {r.id: r for r in _catalog()}
    results = []
    for v in sorted(verdicts, key=lambda v: v.id):
        rec = by_id.get(v.id)
        results.append({
            "id": v.id,
            "mode": REPORT_MODE[v.mode],
            "status": v.status,
            "max_abs_residual": v.max_abs_residual,
            "first_mismatch_exponent": (
                None if v.first_mismatch_exponent is None
                else format_exponent(v.first_mismatch_exponent)),
            "elapsed_ms": 0,
            "paper_label": rec.paper_ref if rec is not None else None,
            "note": v.note,
        })
    return {
        "version": "1",
        "seed": config.seed,
        "tolerance": config.comparison_tolerance,
        "order": (None if order is None
                  else int(order) if Fraction(order).denominator == 1
                  else str(order)),
        "results": results,
    }


# ---- the degree-eight test function and its master drivers ----

def _theta1_bilateral(z: complex, tau: complex,
                      config: EvalConfig = DEFAULT_CONFIG) -> complex:
    # -i sum_{n in Z} (-1)^n q^{(2n+1)^2/8} e^{(2n+1)iz}; the Gaussian factor
    # beats the exponential one for every z, at the cost of a two-sided sum
    total = 0j
    for n in range(config.term_cap + 1):
        m = 2 * n + 1
        gauss = (-1) ** n * nv_qpow(tau, Fraction(m * m, 8))
        for term in (gauss * cmath.exp(1j * m * z), -gauss * cmath.exp(-1j * m * z)):
            total += term
        if n > 2 * abs(z.imag) / (math.pi * tau.imag) and abs(term) < config.term_tolerance:
            break
    else:
        raise NumericError("bilateral theta_1 series did not converge")
    return -1j * total


@dataclass(frozen=True)
class Degree8TestFunction:
    """f(z) = prod_i theta_1(z + a_i) theta_1(z - a_i) over four shifts.

    f is even, pi-periodic, and satisfies f(z + pi*tau) = q^-4 e^{-16iz} f(z);
    those are exactly the transformation laws the master identities need.
    The special values f(0), f(pi/2), f((pi+pi*tau)/2), f(pi*tau/2) reduce to
    products of theta constants at the shifts, which keeps every evaluation
    inside the convergence strip no matter how tau was drawn.
    """
    shifts: tuple[complex, complex, complex, complex]
    tau: complex

    def value(self, z: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
        out = 1.0 + 0j
        for a in self.shifts:
            out *= nv_theta(1, EvalPoint(z + a, self.tau), config)
            out *= nv_theta(1, EvalPoint(z - a, self.tau), config)
        return out

    def _corner(self, j: int, config: EvalConfig) -> complex:
        out = 1.0 + 0j
        for a in self.shifts:
            out *= nv_theta(j, EvalPoint(a, self.tau), config) ** 2
        return out

    def at_zero(self, config: EvalConfig = DEFAULT_CONFIG) -> complex:
        return self._corner(1, config)

    def at_half_pi(self, config: EvalConfig = DEFAULT_CONFIG) -> complex:
        return self._corner(2, config)

    def at_half_both(self, config: EvalConfig = DEFAULT_CONFIG) -> complex:
        # f((pi + pi*tau)/2) = q^-1 prod theta_3(a_i)^2
        return self._corner(3, config) / nv_qpow(self.tau, 1)

    def at_half_tau(self, config: EvalConfig = DEFAULT_CONFIG) -> complex:
        # f(pi*tau/2) = q^-1 prod theta_4(a_i)^2
        return self._corner(4, config) / nv_qpow(self.tau, 1)

    def log_deriv_at_zero(self, order: int,
                          config: EvalConfig = DEFAULT_CONFIG) -> complex:
        """(log f)^(order)(0) for even order; odd derivatives vanish."""
        if order % 2:
            return 0j
        return 2 * sum(nv_logdtheta(1, order, EvalPoint(a, self.tau), config)
                       for a in self.shifts)

    def transformation_residuals(self, z: complex,
                                 config: EvalConfig = DEFAULT_CONFIG) -> tuple[float, float]:
        """Residuals of the two functional equations at z; a cheap legality
        check that a candidate f really has the required degree. The point
        z + pi*tau lies outside the sine-series strip, so that leg uses the
        bilateral exponential series, which converges in any horizontal strip.
        """
        base = self.value(z, config)
        shifted_pi = self.value(z + math.pi, config)
        w = z + cmath.pi * self.tau
        shifted_tau = 1.0 + 0j
        for a in self.shifts:
            shifted_tau *= _theta1_bilateral(w + a, self.tau, config)
            shifted_tau *= _theta1_bilateral(w - a, self.tau, config)
        factor = nv_qpow(self.tau, -4) * cmath.exp(-16j * z)
        return (_residual(shifted_pi, base), _residual(shifted_tau, factor * base))


def verify_master_degree8(f: Degree8TestFunction, x: complex, y: complex,
                          config: EvalConfig = DEFAULT_CONFIG) -> float:
    """Normalised residual of the two-variable degree-eight master identity
    at (x, y). Raises NumericError if any evaluation point is too close to
    the lattice for the series to be trusted."""
    tau = f.tau
    q = nv_qpow(tau, 1)

    def th(j: int, z: complex) -> complex:
        return nv_theta(j, EvalPoint(z, tau), config)

    lhs = 4 * f.value(x, config) / th(1, 2 * x) ** 2 \
        - 4 * f.value(y, config) / th(1, 2 * y) ** 2
    bracket = (
        -f.at_zero(config) / (th(1, x) ** 2 * th(1, y) ** 2)
        + f.at_half_pi(config) / (th(2, x) ** 2 * th(2, y) ** 2)
        - q * f.at_half_both(config) / (th(3, x) ** 2 * th(3, y) ** 2)
        + q * f.at_half_tau(config) / (th(4, x) ** 2 * th(4, y) ** 2))
    rhs = th(1, x + y) * th(1, x - y) * bracket
    return _residual(lhs, rhs)


def verify_master_limit(f: Degree8TestFunction,
                        config: EvalConfig = DEFAULT_CONFIG) -> float:
    """Normalised residual of the coalescence form of the master identity,
    which trades the free points for (log f)'' (0) and (log f)'''' (0)."""
    tau = f.tau
    q = nv_qpow(tau, 1)
    L = nv_eisenstein("L", tau, config)
    M = nv_eisenstein("M", tau, config)
    d2 = f.log_deriv_at_zero(2, config)
    d4 = f.log_deriv_at_zero(4, config)
    lhs = (8 * L + 3 * d2) ** 2 + 8 * M + 3 * d4

    t1p = nv_theta1_prime0(tau, config)
    t2 = nv_theta(2, EvalPoint(0, tau), config)
    t3 = nv_theta(3, EvalPoint(0, tau), config)
    t4 = nv_theta(4, EvalPoint(0, tau), config)
    rhs = 72 * t1p ** 4 / f.at_zero(config) * (
        f.at_half_pi(config) / t2 ** 4
        - q * f.at_half_both(config) / t3 ** 4
        + q * f.at_half_tau(config) / t4 ** 4)
    return _residual(lhs, rhs)
