"""Exact truncated q-series with rational or Laurent-polynomial coefficients.

A series is a finite sorted list of (exponent, coefficient) pairs together
with an exclusive truncation order: every exponent below the order is known
exactly, everything at or above it is unknown (not zero). Exponents are exact
rationals (``QExponent`` is ``fractions.Fraction``), which is what makes
fractional powers like q^{1/24} or q^{49/120} representable without any
floating point.

Coefficients are either rationals or Laurent polynomials in u = exp(iz); the
coefficient kind is a property of the whole series. A bivariate series may in
addition carry a unit prefactor (-i)^phase with phase in {0, 1}; the square
(-i)^2 = -1 is always absorbed into the coefficients, so the tag never grows.

All values are immutable by convention and every operation returns a new
series. Binary operations track how far the result is actually known: a
product is trusted only to min(order_a + lead_b, order_b + lead_a), inversion
by leading exponent l costs 2l of known order, and reading a coefficient at
or beyond the truncation order is an error rather than a zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Mapping, Union

QExponent = Fraction
# exclusive truncation defaults: identities with fractional exponent grids are
# far denser per unit order, so they use a smaller default
DEFAULT_ORDER_FRACTIONAL = Fraction(30)
DEFAULT_ORDER_INTEGER = Fraction(100)

RATIONAL = "rational"
LAURENT = "laurent"


# ---- Laurent coefficients ----

class LaurentCoeff:
    """Finite Laurent polynomial in u with rational coefficients.

    Stored as a degree -> value map with no explicit zeros; the empty map is
    the zero polynomial.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for d, v in terms.items():
                v = Fraction(v)
                if v != 0:
                    clean[int(d)] = v
        self.terms = clean

    @staticmethod
    def constant(v) -> "LaurentCoeff":
        return LaurentCoeff({0: Fraction(v)})

    @staticmethod
    def monomial(degree: int, v) -> "LaurentCoeff":
        return LaurentCoeff({degree: Fraction(v)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentCoeff):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: Fraction(other)} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: "LaurentCoeff") -> "LaurentCoeff":
        out = dict(self.terms)
        for d, v in other.terms.items():
            w = out.get(d, Fraction(0)) + v
            if w == 0:
                out.pop(d, None)
            else:
                out[d] = w
        res = LaurentCoeff.__new__(LaurentCoeff)
        res.terms = out
        return res

    def __neg__(self) -> "LaurentCoeff":
        res = LaurentCoeff.__new__(LaurentCoeff)
        res.terms = {d: -v for d, v in self.terms.items()}
        return res

    def __mul__(self, other: "LaurentCoeff") -> "LaurentCoeff":
        out: dict[int, Fraction] = {}
        for d1, v1 in self.terms.items():
            for d2, v2 in other.terms.items():
                d = d1 + d2
                w = out.get(d, Fraction(0)) + v1 * v2
                if w == 0:
                    out.pop(d, None)
                else:
                    out[d] = w
        res = LaurentCoeff.__new__(LaurentCoeff)
        res.terms = out
        return res

    def scale(self, v: Fraction) -> "LaurentCoeff":
        v = Fraction(v)
        res = LaurentCoeff.__new__(LaurentCoeff)
        res.terms = {} if v == 0 else {d: c * v for d, c in self.terms.items()}
        return res

    def map_degrees(self, fn: Callable[[int, Fraction], Fraction]) -> "LaurentCoeff":
        """New coefficient with each value v at degree d replaced by fn(d, v)."""
        return LaurentCoeff({d: fn(d, v) for d, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for d in sorted(self.terms):
            v = self.terms[d]
            if d == 0:
                bits.append(str(v))
            else:
                bits.append(f"{v}*u^{d}")
        return " + ".join(bits)


Coeff = Union[Fraction, LaurentCoeff]


def _zero_coeff(kind: str) -> Coeff:
    return Fraction(0) if kind == RATIONAL else LaurentCoeff()

def _is_zero_coeff(c: Coeff) -> bool:
    return c.is_zero() if isinstance(c, LaurentCoeff) else c == 0


# ---- The series type ----

class QSeriesError(ValueError):
    pass


class QSeries:
    __slots__ = ("terms", "trunc_order", "kind", "phase")

    def __init__(self, terms: Iterable[tuple[Fraction, Coeff]] | Mapping[Fraction, Coeff],
                 trunc_order, kind: str = RATIONAL, phase: int = 0):
        if kind not in (RATIONAL, LAURENT):
            raise QSeriesError(f"unknown coefficient kind {kind!r}")
        order = Fraction(trunc_order)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: list[tuple[Fraction, Coeff]] = []
        for e, c in items:
            e = Fraction(e)
            if kind == LAURENT and isinstance(c, (int, Fraction)):
                c = LaurentCoeff.constant(c)
            elif kind == RATIONAL:
                if isinstance(c, LaurentCoeff):
                    raise QSeriesError("Laurent coefficient in rational-kind series")
                c = Fraction(c)
            if _is_zero_coeff(c):
                continue
            if e >= order:
                raise QSeriesError(f"exponent {e} not below truncation order {order}")
            clean.append((e, c))
        clean.sort(key=lambda t: t[0])
        for i in range(1, len(clean)):
            if clean[i - 1][0] == clean[i][0]:
                raise QSeriesError(f"duplicate exponent {clean[i][0]}")
        if phase not in (0, 1):
            raise QSeriesError("phase must be 0 or 1")
        self.terms = tuple(clean)
        self.trunc_order = order
        self.kind = kind
        self.phase = phase if clean else 0

    # -- inspection --

    def is_zero(self) -> bool:
        return not self.terms

    def leading(self) -> tuple[Fraction, Coeff]:
        if not self.terms:
            raise QSeriesError("zero series has no leading term")
        return self.terms[0]

    def leading_exponent_bound(self) -> Fraction:
        # lower bound on any term this series could contain
        return self.terms[0][0] if self.terms else self.trunc_order

    def __repr__(self):
        head = ", ".join(f"q^{e}: {c!r}" for e, c in self.terms[:6])
        more = "" if len(self.terms) <= 6 else f", ... ({len(self.terms)} terms)"
        pre = "" if self.phase == 0 else "(-i) * "
        return f"QSeries({pre}[{head}{more}], O(q^{self.trunc_order}), {self.kind})"

    # -- operator sugar, delegating to the qs_* functions --

    def __add__(self, other):
        return qs_add(self, _coerce(other, self))

    __radd__ = __add__

    def __sub__(self, other):
        return qs_add(self, qs_neg(_coerce(other, self)))

    def __rsub__(self, other):
        return qs_add(_coerce(other, self), qs_neg(self))

    def __neg__(self):
        return qs_neg(self)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        return qs_scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, qs_invert(other))
        return qs_scale(self, 1 / Fraction(other))

    def __rtruediv__(self, other):
        return qs_scale(qs_invert(self), other)

    def __pow__(self, n: int):
        return qs_pow_int(self, n)


def _coerce(x, like: QSeries) -> QSeries:
    if isinstance(x, QSeries):
        return x
    return qs_constant(Fraction(x), like.trunc_order, like.kind)


# ---- constructors ----

def qs_zero(order, kind: str = RATIONAL) -> QSeries:
    return QSeries([], order, kind)

def qs_constant(v, order, kind: str = RATIONAL) -> QSeries:
    return QSeries([(Fraction(0), Fraction(v))], order, kind)

def qs_one(order, kind: str = RATIONAL) -> QSeries:
    return qs_constant(1, order, kind)

def qs_monomial(exponent, coeff, order, kind: str = RATIONAL, phase: int = 0) -> QSeries:
    return QSeries([(Fraction(exponent), coeff)], order, kind, phase)


# ---- kind promotion ----

def _promote(a: QSeries) -> QSeries:
    if a.kind == LAURENT:
        return a
    out = QSeries.__new__(QSeries)
    out.terms = tuple((e, LaurentCoeff.constant(c)) for e, c in a.terms)
    out.trunc_order = a.trunc_order
    out.kind = LAURENT
    out.phase = a.phase
    return out

def _align(a: QSeries, b: QSeries) -> tuple[QSeries, QSeries]:
    if a.kind == b.kind:
        return a, b
    return _promote(a), _promote(b)

def _make(terms: dict[Fraction, Coeff], order: Fraction, kind: str, phase: int) -> QSeries:
    # fast internal constructor; assumes coefficients already of correct type
    clean = [(e, c) for e, c in terms.items() if not _is_zero_coeff(c) and e < order]
    clean.sort(key=lambda t: t[0])
    out = QSeries.__new__(QSeries)
    out.terms = tuple(clean)
    out.trunc_order = order
    out.kind = kind
    out.phase = phase if clean else 0
    return out


# ---- arithmetic ----

def qs_truncate(a: QSeries, order) -> QSeries:
    order = Fraction(order)
    if order > a.trunc_order:
        raise QSeriesError("cannot extend a truncated series")
    return _make(dict(a.terms), order, a.kind, a.phase)

def qs_neg(a: QSeries) -> QSeries:
    out = QSeries.__new__(QSeries)
    out.terms = tuple((e, -c) for e, c in a.terms)
    out.trunc_order = a.trunc_order
    out.kind = a.kind
    out.phase = a.phase
    return out

def qs_scale(a: QSeries, v) -> QSeries:
    """Multiply by a rational scalar (phase untouched)."""
    v = Fraction(v)
    if v == 0:
        return qs_zero(a.trunc_order, a.kind)
    if a.kind == RATIONAL:
        terms = tuple((e, c * v) for e, c in a.terms)
    else:
        terms = tuple((e, c.scale(v)) for e, c in a.terms)
    out = QSeries.__new__(QSeries)
    out.terms = terms
    out.trunc_order = a.trunc_order
    out.kind = a.kind
    out.phase = a.phase
    return out

def qs_mul_i(a: QSeries, k: int = 1) -> QSeries:
    """Multiply by i^k, folding the result into the (-i)^phase tag."""
    out = a
    for _ in range(k % 4):
        # i * (-i)^0 = (-1) * (-i)^1 ; i * (-i)^1 = (-i)^0
        if out.phase == 0:
            out = _with_phase(qs_neg(out), 1)
        else:
            out = _with_phase(out, 0)
    return out

def _with_phase(a: QSeries, phase: int) -> QSeries:
    out = QSeries.__new__(QSeries)
    out.terms = a.terms
    out.trunc_order = a.trunc_order
    out.kind = a.kind
    out.phase = phase if a.terms else 0
    return out

def qs_add(a: QSeries, b: QSeries) -> QSeries:
    a, b = _align(a, b)
    if a.phase != b.phase and not a.is_zero() and not b.is_zero():
        raise QSeriesError("cannot add series with different unit prefactors")
    phase = a.phase if not a.is_zero() else b.phase
    order = min(a.trunc_order, b.trunc_order)
    acc: dict[Fraction, Coeff] = {}
    for e, c in a.terms:
        if e < order:
            acc[e] = c
    for e, c in b.terms:
        if e >= order:
            continue
        if e in acc:
            acc[e] = acc[e] + c
        else:
            acc[e] = c
    return _make(acc, order, a.kind, phase)

def qs_sub(a: QSeries, b: QSeries) -> QSeries:
    return qs_add(a, qs_neg(b))

def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    a, b = _align(a, b)
    order = min(a.trunc_order + b.leading_exponent_bound(),
                b.trunc_order + a.leading_exponent_bound())
    phase = (a.phase + b.phase) % 4
    negate = phase >= 2  # (-i)^2 = -1 folds into coefficients
    phase %= 2
    acc: dict[Fraction, Coeff] = {}
    for ea, ca in a.terms:
        if ea + b.leading_exponent_bound() >= order:
            break
        for eb, cb in b.terms:
            e = ea + eb
            if e >= order:
                break
            prod = ca * cb
            if e in acc:
                acc[e] = acc[e] + prod
            else:
                acc[e] = prod
    if negate:
        acc = {e: -c for e, c in acc.items()}
    return _make(acc, order, a.kind, phase)

def qs_pow_int(a: QSeries, n: int) -> QSeries:
    """Integer power by repeated squaring; negative powers go through qs_invert."""
    n = int(n)
    if n < 0:
        return qs_pow_int(qs_invert(a), -n)
    if n == 0:
        return qs_one(a.trunc_order, a.kind)
    result = None
    base = a
    while n:
        if n & 1:
            result = base if result is None else qs_mul(result, base)
        n >>= 1
        if n:
            base = qs_mul(base, base)
    return result

def qs_coefficient(a: QSeries, exponent) -> Coeff:
    """Coefficient at an exponent strictly below the truncation order.

    Asking at or beyond the order is an error: that coefficient is unknown,
    not zero.
    """
    e = Fraction(exponent)
    if e >= a.trunc_order:
        raise QSeriesError(
            f"coefficient at q^{e} is beyond the known order {a.trunc_order}")
    for ee, c in a.terms:
        if ee == e:
            return c
        if ee > e:
            break
    return _zero_coeff(a.kind)

def qs_substitute_tau_scale(a: QSeries, c) -> QSeries:
    """Substitute q -> q^c (tau -> c*tau) for a positive rational c."""
    c = Fraction(c)
    if c <= 0:
        raise QSeriesError("tau scale must be positive")
    out = QSeries.__new__(QSeries)
    out.terms = tuple((e * c, v) for e, v in a.terms)
    out.trunc_order = a.trunc_order * c
    out.kind = a.kind
    out.phase = a.phase
    return out


# ---- inversion and square root ----

def _invert_coeff(kind: str, lc: Coeff) -> Coeff:
    if kind == RATIONAL:
        return Fraction(1) / lc
    (deg, val), = lc.terms.items()
    return LaurentCoeff.monomial(-deg, Fraction(1) / val)

def _relative_parts(a: QSeries) -> tuple[Fraction, Coeff, Coeff, QSeries]:
    """Split a as lead_coeff * q^lead_exp * (1 + x); also returns 1/lead_coeff."""
    le, lc = a.leading()
    rel_order = a.trunc_order - le
    inv_lc = _invert_coeff(a.kind, lc)
    terms: dict[Fraction, Coeff] = {e - le: c * inv_lc for e, c in a.terms[1:]}
    x = _make(terms, rel_order, a.kind, 0)
    return le, lc, inv_lc, x

def _one_plus(x: QSeries) -> QSeries:
    return qs_add(qs_one(x.trunc_order, x.kind), x)

def qs_invert(a: QSeries) -> QSeries:
    """Multiplicative inverse. Needs an invertible leading coefficient:
    any nonzero rational, or a single-term Laurent coefficient. Inversion by
    leading exponent l returns a series known to order (original - 2l).
    """
    if a.is_zero():
        raise QSeriesError("cannot invert the zero series")
    le, lc = a.leading()
    if a.kind == LAURENT and not lc.is_monomial():
        raise QSeriesError("leading Laurent coefficient is not a monomial; not invertible")
    le, lc, inv_lc, x = _relative_parts(a)
    rel_order = x.trunc_order
    if x.is_zero():
        inv_rel = qs_one(rel_order, a.kind)
    else:
        b = _one_plus(x)
        correct = x.leading()[0]
        y = qs_one(rel_order, a.kind)
        while correct < rel_order:
            # Newton step y <- y*(2 - b*y) doubles the correct order
            y = qs_mul(y, qs_sub(qs_constant(2, rel_order, a.kind), qs_mul(b, y)))
            y = qs_truncate(y, rel_order)
            correct = correct * 2
        inv_rel = y
    shifted = {e - le: (c * inv_lc) for e, c in inv_rel.terms}
    out = _make(shifted, rel_order - le, a.kind, 0)
    if a.phase == 1:
        # 1/(-i) = i = -(-i)
        out = _with_phase(qs_neg(out), 1)
    return out

def _rational_sqrt(v: Fraction) -> Fraction:
    if v <= 0:
        raise QSeriesError(f"leading coefficient {v} is not a positive square")
    np_, dp = isqrt(v.numerator), isqrt(v.denominator)
    if np_ * np_ != v.numerator or dp * dp != v.denominator:
        raise QSeriesError(f"leading coefficient {v} is not a perfect square in Q")
    return Fraction(np_, dp)

def qs_sqrt(a: QSeries) -> QSeries:
    """Principal square root of a rational-kind series.

    Requires a perfect-square positive leading coefficient; the branch is
    fixed by taking the positive root of the leading term. Errors if the
    coefficient recursion would leave the rationals.
    """
    if a.kind != RATIONAL:
        raise QSeriesError("square root is defined for rational-kind series only")
    if a.is_zero():
        raise QSeriesError("square root of the zero series is not tracked")
    le, lc, _, x = _relative_parts(a)
    root_lc = _rational_sqrt(lc)
    rel_order = x.trunc_order
    if x.is_zero():
        root_rel = qs_one(rel_order)
    else:
        b = _one_plus(x)
        # Newton for the inverse square root is division free:
        # w <- w*(3 - b*w^2)/2, then sqrt(b) = b*w
        correct = x.leading()[0]
        w = qs_one(rel_order)
        while correct < rel_order:
            bw2 = qs_mul(b, qs_mul(w, w))
            w = qs_scale(qs_mul(w, qs_sub(qs_constant(3, rel_order), bw2)), Fraction(1, 2))
            w = qs_truncate(w, rel_order)
            correct = correct * 2
        root_rel = qs_truncate(qs_mul(b, w), rel_order)
    half = le / 2
    out = {e + half: c * root_lc for e, c in root_rel.terms}
    return _make(out, rel_order + half, RATIONAL, 0)


# ---- z-shift operations on bivariate series ----

def qs_shift_z_pi(a: QSeries) -> QSeries:
    """Substitute z -> z + pi: the u^d coefficient picks up (-1)^d."""
    if a.kind != LAURENT:
        raise QSeriesError("z-shift needs a Laurent-kind series")
    terms = tuple((e, c.map_degrees(lambda d, v: v if d % 2 == 0 else -v))
                  for e, c in a.terms)
    out = QSeries.__new__(QSeries)
    out.terms = terms
    out.trunc_order = a.trunc_order
    out.kind = a.kind
    out.phase = a.phase
    return out

def qs_shift_z_half_pi(a: QSeries) -> QSeries:
    """Substitute z -> z + pi/2. Each u^d picks up i^d, so the series must be
    parity homogeneous (all degrees even or all odd) for the result to carry
    a single unit prefactor."""
    if a.kind != LAURENT:
        raise QSeriesError("z-shift needs a Laurent-kind series")
    parities = {d % 2 for _, c in a.terms for d in c.terms}
    if len(parities) > 1:
        raise QSeriesError("z -> z + pi/2 needs a parity-homogeneous series")
    def twist_even(d: int, v: Fraction) -> Fraction:
        return v if d % 4 == 0 else -v
    def twist_odd(d: int, v: Fraction) -> Fraction:
        return v if d % 4 == 1 else -v
    if not parities or 0 in parities:
        terms = tuple((e, c.map_degrees(twist_even)) for e, c in a.terms)
        return _make(dict(terms), a.trunc_order, a.kind, a.phase)
    # odd degrees: i^d = i * i^(d-1), pull one factor of i into the phase tag
    terms = tuple((e, c.map_degrees(twist_odd)) for e, c in a.terms)
    out = _make(dict(terms), a.trunc_order, a.kind, a.phase)
    return qs_mul_i(out, 1)

def qs_shift_z_pitau(a: QSeries, r) -> QSeries:
    """Substitute z -> z + r*pi*tau: q^e u^d becomes q^{e + r d / 2} u^d.

    The shift moves exponents by a degree-dependent amount, so the known
    order drops to order + r*d/2 minimised over the stored degrees.
    """
    if a.kind != LAURENT:
        raise QSeriesError("z-shift needs a Laurent-kind series")
    r = Fraction(r)
    if r == 0:
        return a
    degrees = [d for _, c in a.terms for d in c.terms]
    if not degrees:
        return a
    shift_bound = min(Fraction(r * d, 2) for d in degrees)
    order = a.trunc_order + shift_bound
    acc: dict[Fraction, Coeff] = {}
    for e, c in a.terms:
        for d, v in c.terms.items():
            ee = e + Fraction(r * d, 2)
            if ee >= order:
                continue
            cur = acc.get(ee)
            mono = LaurentCoeff.monomial(d, v)
            acc[ee] = mono if cur is None else cur + mono
    return _make(acc, order, a.kind, a.phase)


# ---- specialisation of symmetric bivariate series ----

def qs_u_collapse_symmetric(a: QSeries, pair_value: Callable[[int], Fraction],
                            zero_value: Fraction) -> QSeries:
    """Collapse a degree-symmetric Laurent series to a rational series.

    Requires coeff(u^d) == coeff(u^-d) for every degree. Each exponent's
    value becomes c_0 * zero_value + sum_{d>0} c_d * pair_value(d); this is
    how exact specialisations at rational multiples of pi stay inside Q.
    The series must carry no unit prefactor (phase folds out for even theta
    powers, which is the intended use).
    """
    if a.kind != LAURENT:
        raise QSeriesError("collapse needs a Laurent-kind series")
    if a.phase != 0:
        raise QSeriesError("collapse needs a phase-free series")
    zero_value = Fraction(zero_value)
    acc: dict[Fraction, Coeff] = {}
    for e, c in a.terms:
        total = Fraction(0)
        for d, v in c.terms.items():
            if d < 0:
                if c.terms.get(-d) != v:
                    raise QSeriesError("series is not symmetric in u -> 1/u")
                continue
            if d == 0:
                total += v * zero_value
            else:
                if c.terms.get(-d) != v:
                    raise QSeriesError("series is not symmetric in u -> 1/u")
                total += v * Fraction(pair_value(d))
        if total:
            acc[e] = total
    return _make(acc, a.trunc_order, RATIONAL, 0)


# ---- equality up to truncation ----

@dataclass(frozen=True)
class EqualityResult:
    equal: bool
    compared_order: Fraction
    mismatch_exponent: Fraction | None = None
    lhs_coeff: Coeff | None = None
    rhs_coeff: Coeff | None = None

    def __bool__(self):
        return self.equal


def qs_equal(a: QSeries, b: QSeries) -> EqualityResult:
    """Compare up to the jointly known order; on failure report the first
    mismatching exponent with both coefficients."""
    a, b = _align(a, b)
    order = min(a.trunc_order, b.trunc_order)
    at = [(e, c) for e, c in a.terms if e < order]
    bt = [(e, c) for e, c in b.terms if e < order]
    if a.phase != b.phase and at and bt:
        e = min(at[0][0], bt[0][0])
        return EqualityResult(False, order, e,
                              qs_coefficient(a, e), qs_coefficient(b, e))
    i = j = 0
    while i < len(at) or j < len(bt):
        ea = at[i][0] if i < len(at) else None
        eb = bt[j][0] if j < len(bt) else None
        if eb is None or (ea is not None and ea < eb):
            return EqualityResult(False, order, ea, at[i][1], _zero_coeff(a.kind))
        if ea is None or eb < ea:
            return EqualityResult(False, order, eb, _zero_coeff(a.kind), bt[j][1])
        if at[i][1] != bt[j][1]:
            return EqualityResult(False, order, ea, at[i][1], bt[j][1])
        i += 1
        j += 1
    return EqualityResult(True, order)


# ---- printing ----

def format_exponent(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"

def format_coeff(c: Coeff) -> str:
    if isinstance(c, LaurentCoeff):
        return repr(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
