"""Jacobi symbol (b|a) by binary GCD: cubic, quadratic and subquadratic
algorithms, a classical reference oracle, and measurement tools."""

from binjacobi.bindiv import BinaryDivision, IterClass, binary_divide_pos, classify
from binjacobi.core import (INF, InternalError, InvalidInput, eps_neg, eps_recip, eps_square,
                            jacobi, jacobi_oracle, normalize, nu)
from binjacobi.cubic import cubic_binary_jacobi, cubic_trace
from binjacobi.fast import fast_binary_jacobi, half_binary_jacobi, half_binary_jacobi_base
from binjacobi.quadratic import harmless_params, quadratic_binary_jacobi, quadratic_trace

__all__ = [
    "INF", "InternalError", "InvalidInput", "BinaryDivision", "IterClass",
    "binary_divide_pos", "classify", "cubic_binary_jacobi", "cubic_trace",
    "eps_neg", "eps_recip", "eps_square", "fast_binary_jacobi", "half_binary_jacobi",
    "half_binary_jacobi_base", "harmless_params", "jacobi", "jacobi_oracle", "normalize",
    "nu", "quadratic_binary_jacobi", "quadratic_trace",
]
