"""Exact and numerical q-series special functions.

Two engines over the nome q = exp(2*pi*i*tau): truncated q-series with
exact rational coefficients (optionally Laurent polynomials in
u = exp(i*z)), and double-precision complex evaluation. On top of them, a
registry of classical theta-function identities with a verification
harness and persisted reports, plus a small CLI (``thetaq``).
"""

from .arith import (DensePoly, divisor_power_sum, divisors, kronecker,
                    rep_squares, rep_triangular)
from .builders import (CharacterSpec, LambertSpec, TRIVIAL, build_eisenstein,
                       build_eta, build_lambert, build_phi_psi,
                       build_theta_bivariate, build_theta_null, chi_bottom,
                       chi_top, qpochhammer)
from .cli import exact_expansion, expr_to_text, main, numeric_value, parse_expr
from .numeric import (DEFAULT_CONFIG, EvalConfig, EvalPoint, NumericError,
                      nv_eisenstein, nv_eta, nv_glaisher_a, nv_half_periods,
                      nv_logdtheta, nv_qpow, nv_rrcf, nv_theta,
                      nv_theta1_prime0, nv_wp, nv_wp_prime)
from .registry import (Degree8TestFunction, IdentityRecord, ParamSampler,
                       RegistryError, Verdict, build_report, get_record,
                       registry_list, verify_all, verify_identity,
                       verify_master_degree8, verify_master_limit,
                       verify_record)
from .series import (DEFAULT_ORDER_FRACTIONAL, DEFAULT_ORDER_INTEGER,
                     EqualityResult, LaurentCoeff, QSeries, QSeriesError,
                     format_coeff, format_exponent, qs_coefficient,
                     qs_constant, qs_equal, qs_invert, qs_monomial, qs_mul,
                     qs_one, qs_pow_int, qs_scale, qs_shift_z_pi,
                     qs_shift_z_pitau, qs_sqrt, qs_truncate,
                     qs_u_collapse_symmetric, qs_zero)

__version__ = "0.1.0"

__all__ = [
    "DensePoly", "divisor_power_sum", "divisors", "kronecker",
    "rep_squares", "rep_triangular",
    "CharacterSpec", "LambertSpec", "TRIVIAL", "build_eisenstein",
    "build_eta", "build_lambert", "build_phi_psi", "build_theta_bivariate",
    "build_theta_null", "chi_bottom", "chi_top", "qpochhammer",
    "exact_expansion", "expr_to_text", "main", "numeric_value", "parse_expr",
    "DEFAULT_CONFIG", "EvalConfig", "EvalPoint", "NumericError",
    "nv_eisenstein", "nv_eta", "nv_glaisher_a", "nv_half_periods",
    "nv_logdtheta", "nv_qpow", "nv_rrcf", "nv_theta", "nv_theta1_prime0",
    "nv_wp", "nv_wp_prime",
    "Degree8TestFunction", "IdentityRecord", "ParamSampler", "RegistryError",
    "Verdict", "build_report", "get_record", "registry_list", "verify_all",
    "verify_identity", "verify_master_degree8", "verify_master_limit",
    "verify_record",
    "DEFAULT_ORDER_FRACTIONAL", "DEFAULT_ORDER_INTEGER", "EqualityResult",
    "LaurentCoeff", "QSeries", "QSeriesError", "format_coeff",
    "format_exponent", "qs_coefficient", "qs_constant", "qs_equal",
    "qs_invert", "qs_monomial", "qs_mul", "qs_one", "qs_pow_int", "qs_scale",
    "qs_shift_z_pi", "qs_shift_z_pitau", "qs_sqrt", "qs_truncate",
    "qs_u_collapse_symmetric", "qs_zero",
    "__version__",
]
