"""Exact evaluation of 3F2(1) series and Rhin-Viola integrals in Q + Q*zeta(2)."""

from .exact_arith import Zeta2Number, binomial, factorial, harmonic, pochhammer
from .params import F32Params, IntegralParams, XParams
from .zeta2_exact import eval_3f2_exact, eval_integral_exact, is_irrational, zeta2_coefficient

__version__ = "0.1.0"

__all__ = [
    "F32Params",
    "IntegralParams",
    "XParams",
    "Zeta2Number",
    "binomial",
    "eval_3f2_exact",
    "eval_integral_exact",
    "factorial",
    "harmonic",
    "is_irrational",
    "pochhammer",
    "zeta2_coefficient",
]
