"""Exact motivic generating functions for Hilbert schemes of points.

Classes live in ``Z[L^(1/2), L^(-1/2)]`` (stored via ``u = -L^(1/2)``),
series are truncated power series in ``t``, and every identity is checked by
exact comparison, never numerically.
"""

from .classes import BettiVector, WeightPoly, realize_euler, realize_weight
from .config import VerifyConfig
from .dtgen import (
    CheckReport,
    unified_formula,
    weight_partition_function,
    z_c3_product,
    z_c3_recursion,
    z_x_exp,
    z_x_power,
)
from .expr import parse_class
from .partitions import count_dpartitions, refined_sum
from .plethysm import exp_pleth, log_pleth, pow_class
from .ring import MotWeight, RatWeight, TruncLaurent
from .series import TruncSeries

__version__ = "0.1.0"

__all__ = [
    "BettiVector",
    "CheckReport",
    "MotWeight",
    "RatWeight",
    "TruncLaurent",
    "TruncSeries",
    "VerifyConfig",
    "WeightPoly",
    "count_dpartitions",
    "exp_pleth",
    "log_pleth",
    "parse_class",
    "pow_class",
    "realize_euler",
    "realize_weight",
    "refined_sum",
    "unified_formula",
    "weight_partition_function",
    "z_c3_product",
    "z_c3_recursion",
    "z_x_exp",
    "z_x_power",
]
