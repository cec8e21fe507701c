"""Coefficient rings: exact Laurent polynomials in s, truncated u-series, t-Laurent scalars and q-series."""
from .qseries import QSeries, exp_q, log_q, q_monomial_series
from .scalar import Scalar, t
from .spoly import Rational, SPoly, hook_product, s, sinh_factor
from .useries import DEFAULT_U_ORDER, USeries, invert_u, to_u_series

__all__ = [
    "DEFAULT_U_ORDER", "QSeries", "Rational", "SPoly", "Scalar", "USeries",
    "exp_q", "hook_product", "invert_u", "log_q", "q_monomial_series", "s",
    "sinh_factor", "t", "to_u_series",
]
