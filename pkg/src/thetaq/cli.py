"""Command-line front end.

Five subcommands: ``list`` enumerates the identity registry, ``expand``
prints exact q-expansions of expressions in a small tau-only language,
``eval`` evaluates builtins or expressions at a point, ``verify`` runs
registry verification and can persist a JSON report, and ``rrcf``
evaluates the Rogers-Ramanujan continued fraction.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Union

from .builders import (LambertSpec, build_eisenstein, build_eta, build_lambert,
                       build_phi_psi, build_theta_null, chi_bottom)
from .numeric import (DEFAULT_CONFIG, EvalPoint, NumericError, nv_eisenstein,
                      nv_eta, nv_glaisher_a, nv_qpow, nv_rrcf, nv_theta,
                      nv_theta1_prime0, nv_wp, nv_wp_prime)
from .registry import (REPORT_MODE, RegistryError, build_report, get_record,
                       registry_list, verify_record)
from .series import (QSeries, QSeriesError, format_coeff, format_exponent,
                     qs_constant, qs_invert, qs_mul, qs_one, qs_pow_int,
                     qs_scale)

# ---- expression language ----

# Functions taking a rescaling argument tau -> c*tau, and those taking none.
_SCALED_FUNCTIONS = ("eta", "theta2", "theta3", "theta4", "theta1p",
                     "E2", "E4", "E6")
_BARE_FUNCTIONS = ("phi", "psi", "a")


class ExprError(ValueError):
    """Parse failure with a 1-based byte offset into the source text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Call:
    name: str
    scale: Optional[Fraction]


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Lit, Call, Neg, Pow, BinOp]


class _Parser:
    """Recursive descent over the grammar

        expr   := term (('+'|'-') term)*
        term   := factor (('*'|'/') factor)*
        factor := '-' factor | power
        power  := atom ['^' ['-'] integer]
        atom   := '(' expr ')' | rational | name ['(' rational ')']
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None) -> ExprError:
        # offsets are 1-based so they match editor columns
        where = self.pos if pos is None else pos
        return ExprError(message, where + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> Expr:
        node = self.parse_expr()
        if self.peek():
            raise self.error("unexpected trailing input")
        return node

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.parse_factor())
        return node

    def parse_factor(self) -> Expr:
        if self.peek() == "-":
            self.pos += 1
            return Neg(self.parse_factor())
        return self.parse_power()

    def parse_power(self) -> Expr:
        node = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                sign = -1
                self.pos += 1
            start = self.pos
            digits = self.scan_digits()
            if not digits:
                raise self.error("expected integer exponent", start)
            node = Pow(node, sign * int(digits))
        return node

    def parse_atom(self) -> Expr:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.parse_expr()
            self.expect(")")
            return node
        if ch.isdigit():
            return Lit(self.scan_rational())
        if ch.isalpha():
            return self.scan_call()
        raise self.error("expected a value")

    def scan_digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    def scan_rational(self) -> Fraction:
        start = self.pos
        numerator = self.scan_digits()
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            raise self.error("literals must be rational, not decimal", self.pos)
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            # only treat '/' as part of the literal when digits follow
            # directly, so "3 / eta(1)" still parses as division
            if self.pos + 1 < len(self.text) and self.text[self.pos + 1].isdigit():
                self.pos += 1
                denominator = self.scan_digits()
                value = Fraction(int(numerator), int(denominator))
                if value == 0 and int(numerator) != 0:
                    raise self.error("zero denominator", start)
                return value
        return Fraction(int(numerator))

    def scan_call(self) -> Expr:
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        name = self.text[start:self.pos]
        if name in _BARE_FUNCTIONS:
            return Call(name, None)
        if name not in _SCALED_FUNCTIONS:
            raise self.error(f"unknown function {name!r}", start)
        self.expect("(")
        if not self.peek().isdigit():
            raise self.error("expected a positive rational scale")
        scale = self.scan_rational()
        if scale <= 0:
            raise self.error("scale must be positive", start)
        self.expect(")")
        return Call(name, scale)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def expr_to_text(node: Expr) -> str:
    """Render an AST back to source. parse_expr(expr_to_text(e)) == e."""
    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, Call):
        if node.scale is None:
            return node.name
        return f"{node.name}({node.scale})"
    if isinstance(node, Neg):
        inner = expr_to_text(node.arg)
        if isinstance(node.arg, (BinOp, Neg)):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Pow):
        base = expr_to_text(node.base)
        atomic = isinstance(node.base, Call) or (
            isinstance(node.base, Lit)
            and node.base.value.denominator == 1
            and node.base.value >= 0)
        if not atomic:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    left = expr_to_text(node.left)
    right = expr_to_text(node.right)
    prec = {"+": 1, "-": 1, "*": 2, "/": 2}[node.op]
    if isinstance(node.left, BinOp) and {"+": 1, "-": 1, "*": 2, "/": 2}[node.left.op] < prec:
        left = f"({left})"
    if isinstance(node.right, BinOp):
        rp = {"+": 1, "-": 1, "*": 2, "/": 2}[node.right.op]
        if rp < prec or (rp == prec and node.op in ("-", "/")):
            right = f"({right})"
    if isinstance(node.right, Neg) and node.op in ("-", "/", "*", "+"):
        right = f"({right})"
    return f"{left} {node.op} {right}"


# ---- compilation ----

def _exact_leaf(name: str, scale: Optional[Fraction], order: Fraction) -> QSeries:
    c = Fraction(1) if scale is None else scale
    if name == "eta":
        return build_eta(order, c)
    if name in ("theta2", "theta3", "theta4"):
        return build_theta_null(int(name[-1]), order, c)
    if name == "theta1p":
        return build_theta_null("1p", order, c)
    if name in ("E2", "E4", "E6"):
        which = {"E2": "L", "E4": "M", "E6": "N"}[name]
        return build_eisenstein(which, order, c)
    if name == "phi":
        return build_phi_psi("phi", order)
    if name == "psi":
        return build_phi_psi("psi", order)
    # a(tau) = 1 + 6 sum_{n>=1} (n|3)-character Lambert terms
    lam = build_lambert(LambertSpec(character=chi_bottom(3)), order)
    return qs_one(order) + qs_scale(lam, 6)


def exact_expansion(node: Expr, order: Fraction) -> QSeries:
    if isinstance(node, Lit):
        return qs_constant(node.value, order)
    if isinstance(node, Neg):
        return -exact_expansion(node.arg, order)
    if isinstance(node, Pow):
        base = exact_expansion(node.base, order)
        if node.exponent < 0:
            return qs_pow_int(qs_invert(base), -node.exponent)
        return qs_pow_int(base, node.exponent)
    if isinstance(node, BinOp):
        left = exact_expansion(node.left, order)
        right = exact_expansion(node.right, order)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return qs_mul(left, right)
        return qs_mul(left, qs_invert(right))
    return _exact_leaf(node.name, node.scale, order)


def numeric_value(node: Expr, tau: complex, config=DEFAULT_CONFIG) -> complex:
    if isinstance(node, Lit):
        return complex(node.value)
    if isinstance(node, Neg):
        return -numeric_value(node.arg, tau, config)
    if isinstance(node, Pow):
        return numeric_value(node.base, tau, config) ** node.exponent
    if isinstance(node, BinOp):
        left = numeric_value(node.left, tau, config)
        right = numeric_value(node.right, tau, config)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left / right
    return _numeric_leaf(node.name, node.scale, tau, config)


def _numeric_leaf(name: str, scale: Optional[Fraction], tau: complex,
                  config) -> complex:
    ct = float(scale) * tau if scale is not None else tau
    if name == "eta":
        return nv_eta(ct, config)
    if name in ("theta2", "theta3", "theta4"):
        return nv_theta(int(name[-1]), EvalPoint(0.0, ct), config)
    if name == "theta1p":
        return nv_theta1_prime0(ct, config)
    if name in ("E2", "E4", "E6"):
        return nv_eisenstein({"E2": "L", "E4": "M", "E6": "N"}[name], ct, config)
    if name == "phi":
        return nv_theta(3, EvalPoint(0.0, 2 * tau), config)
    if name == "psi":
        return nv_theta(2, EvalPoint(0.0, tau), config) / (2 * nv_qpow(tau, Fraction(1, 8)))
    return nv_glaisher_a(tau, config)


# ---- value formatting ----

def _format_complex(v: complex) -> str:
    re = f"{v.real:.12g}"
    im = f"{v.imag:.12g}"
    if im in ("0", "-0"):
        return re
    if re in ("0", "-0"):
        return f"{im}i"
    if im.startswith("-"):
        return f"{re}-{im[1:]}i"
    return f"{re}+{im}i"


def parse_complex(text: str) -> complex:
    """Parse "a+bi" style literals; bare "i" means 1i."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty complex literal")
    if not s.endswith("i"):
        return complex(float(s), 0.0)
    body = s[:-1]
    split = 0
    for k in range(len(body) - 1, 0, -1):
        # an internal sign starts the imaginary part unless it belongs
        # to a float exponent like 1e-3
        if body[k] in "+-" and body[k - 1] not in "eE":
            split = k
            break
    real_part, imag_part = body[:split], body[split:]
    if imag_part in ("", "+"):
        imag = 1.0
    elif imag_part == "-":
        imag = -1.0
    else:
        imag = float(imag_part)
    real = float(real_part) if real_part else 0.0
    return complex(real, imag)


# ---- subcommands ----

def cmd_expand(args) -> int:
    try:
        node = parse_expr(args.expr)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    target = Fraction(args.order)
    if target < 0:
        print("error: order must be nonnegative", file=sys.stderr)
        return 2
    try:
        series, limit = _expand_to_depth(node, target)
    except (QSeriesError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_render_expansion(series, limit))
    return 0


def _expand_to_depth(node: Expr, target: Fraction):
    """Expand so that `target` orders past the leading exponent are known.

    Division and inversion can lower a series' truncation order, so the
    build order is grown until the printable window fits under it.
    """
    build = target + 4
    series = exact_expansion(node, build)
    for _ in range(5):
        if not series.terms:
            return series, None
        lead = min(e for e, _ in series.terms)
        needed = lead + target
        if needed < series.trunc_order:
            return series, needed
        build += needed - series.trunc_order + 2
        series = exact_expansion(node, build)
    lead = min(e for e, _ in series.terms)
    return series, min(lead + target, series.trunc_order - Fraction(1, 1000))


def _render_expansion(series: QSeries, limit) -> str:
    if not series.terms or limit is None:
        return "0"
    lead = min(e for e, _ in series.terms)
    shown = [(e, c) for e, c in series.terms if e <= limit]
    on_grid = all((e - lead).denominator == 1 for e, _ in series.terms)
    if on_grid:
        # dense integer grid from the leading exponent, zeros included,
        # so gaps in the coefficient sequence stay visible
        coeffs = dict(shown)
        rows = []
        k = 0
        while lead + k <= limit:
            e = lead + k
            rows.append((e, coeffs.get(e, Fraction(0))))
            k += 1
    else:
        rows = shown
    if not rows:
        return "0"
    return ", ".join(f"{format_exponent(e)}: {format_coeff(c)}"
                     for e, c in rows)


_EVAL_THETAS = {"theta1": 1, "theta2": 2, "theta3": 3, "theta4": 4}
_EVAL_Z_BUILTINS = ("theta1", "theta2", "theta3", "theta4", "wp", "wp_prime")
_EVAL_TAU_BUILTINS = ("eta", "theta1p", "rrcf")


def cmd_eval(args) -> int:
    try:
        tau = parse_complex(args.tau)
    except ValueError:
        print(f"error: cannot parse tau {args.tau!r}", file=sys.stderr)
        return 2
    if tau.imag <= 0:
        print("error: tau must lie in the upper half-plane", file=sys.stderr)
        return 2
    target = args.target
    try:
        if target in _EVAL_Z_BUILTINS:
            z = parse_complex(args.z) if args.z is not None else 0.0
            point = EvalPoint(z, tau)
            if target in _EVAL_THETAS:
                value = nv_theta(_EVAL_THETAS[target], point)
            elif target == "wp":
                value = nv_wp(point)
            else:
                value = nv_wp_prime(point)
        elif target in _EVAL_TAU_BUILTINS:
            if args.z is not None:
                print(f"error: {target} takes no z argument", file=sys.stderr)
                return 2
            if target == "eta":
                value = nv_eta(tau)
            elif target == "theta1p":
                value = nv_theta1_prime0(tau)
            else:
                value = nv_rrcf(tau)
        else:
            if args.z is not None:
                print("error: expressions are tau-only; use a builtin for "
                      "z-dependent values", file=sys.stderr)
                return 2
            node = parse_expr(target)
            value = numeric_value(node, tau)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_format_complex(value))
    return 0


def cmd_rrcf(args) -> int:
    try:
        tau = parse_complex(args.tau)
    except ValueError:
        print(f"error: cannot parse tau {args.tau!r}", file=sys.stderr)
        return 2
    if tau.imag <= 0:
        print("error: tau must lie in the upper half-plane", file=sys.stderr)
        return 2
    try:
        product = nv_rrcf(tau)
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"product: {_format_complex(product)}")
    if args.closed_form:
        if abs(tau - 1j) > 1e-12:
            print("error: the closed form is specific to tau = i",
                  file=sys.stderr)
            return 2
        closed = math.sqrt((5 + math.sqrt(5)) / 2) - (1 + math.sqrt(5)) / 2
        print(f"closed form: {_format_complex(complex(closed))}")
        print(f"difference: {abs(product - closed):.3e}")
    return 0


def cmd_list(args) -> int:
    mode = None
    if args.mode is not None:
        inverse = {v: k for k, v in REPORT_MODE.items()}
        if args.mode not in inverse:
            print(f"error: unknown mode {args.mode!r}; expected one of "
                  f"{sorted(inverse)}", file=sys.stderr)
            return 2
        mode = inverse[args.mode]
    records = registry_list(section=args.section, mode=mode)
    for rec in records:
        print(f"{rec.id:28} {REPORT_MODE[rec.mode]:16} section {rec.section}")
    print(f"{len(records)} identities", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    if (args.identity is None) == (not args.all):
        print("error: give exactly one identity id or --all", file=sys.stderr)
        return 2
    config = replace(DEFAULT_CONFIG, seed=args.seed)
    if args.tol is not None:
        config = replace(config, comparison_tolerance=args.tol)
    order = Fraction(args.order) if args.order is not None else None
    if args.identity is not None:
        try:
            records = [get_record(args.identity)]
        except RegistryError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        records = list(registry_list())
    verdicts = [verify_record(r, order=order, samples=args.samples,
                              config=config)
                for r in records]
    for v in verdicts:
        line = f"{v.id}: {v.status}"
        if v.max_abs_residual is not None:
            line += f"  (max residual {v.max_abs_residual:.3e})"
        elif v.first_mismatch_exponent is not None:
            line += (f"  (first mismatch at q^"
                     f"{format_exponent(v.first_mismatch_exponent)})")
        if args.timings:
            line += f"  [{v.elapsed * 1000.0:.0f} ms]"
        print(line)
        if v.note and v.status in ("fail", "error"):
            print(f"  note: {v.note}")
    ok = sum(1 for v in verdicts if v.ok)
    print(f"{ok}/{len(verdicts)} ok")
    if args.json is not None:
        report = build_report(verdicts, config, order=order)
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return 0 if ok == len(verdicts) else 1


# ---- argument plumbing ----

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetaq",
        description="q-series expansion, evaluation, and identity verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="enumerate registry identities")
    p_list.add_argument("--section", type=int, default=None)
    p_list.add_argument("--mode", default=None,
                        help="exact-q | exact-bivariate | numeric | arithmetic")
    p_list.set_defaults(func=cmd_list)

    p_exp = sub.add_parser("expand", help="print an exact q-expansion")
    p_exp.add_argument("expr", help="expression, e.g. 'eta(1)^3 * 2'")
    p_exp.add_argument("--order", type=Fraction, default=Fraction(10),
                       help="orders past the leading exponent (inclusive)")
    p_exp.set_defaults(func=cmd_expand)

    p_eval = sub.add_parser("eval", help="evaluate numerically at a point")
    p_eval.add_argument("target",
                        help="builtin (theta1..theta4, eta, theta1p, wp, "
                             "wp_prime, rrcf) or a tau-only expression")
    p_eval.add_argument("--z", default=None, help="complex like 0.3+0.1i")
    p_eval.add_argument("--tau", required=True,
                        help="complex with positive imaginary part")
    p_eval.set_defaults(func=cmd_eval)

    p_ver = sub.add_parser("verify", help="verify registry identities")
    p_ver.add_argument("identity", nargs="?", default=None)
    p_ver.add_argument("--all", action="store_true")
    p_ver.add_argument("--order", default=None,
                       help="exact-mode truncation order override")
    p_ver.add_argument("--samples", type=int, default=None)
    p_ver.add_argument("--tol", type=float, default=None)
    p_ver.add_argument("--seed", type=int, default=42)
    p_ver.add_argument("--json", default=None, metavar="PATH",
                       help="write the report JSON here (elapsed_ms is "
                            "normalised to 0 so reruns are byte-identical)")
    p_ver.add_argument("--timings", action="store_true",
                       help="show real per-record wall time on stdout")
    p_ver.set_defaults(func=cmd_verify)

    p_rrcf = sub.add_parser("rrcf",
                            help="Rogers-Ramanujan continued fraction value")
    p_rrcf.add_argument("--tau", required=True)
    p_rrcf.add_argument("--closed-form", action="store_true",
                        help="compare with the tau=i closed form")
    p_rrcf.set_defaults(func=cmd_rrcf)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
