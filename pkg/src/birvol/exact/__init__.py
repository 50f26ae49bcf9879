"""Exact arithmetic over Q: polynomials and rational functions."""

from .kernels import BACKEND
from .polynomial import Polynomial, as_rational, format_polynomial, poly_arith, variables
from .ratfunc import (
    RationalFunction,
    format_rational_function,
    random_point,
    rf_arith,
    rf_equal,
    rf_substitute,
)


def poly_eval(p: Polynomial, point):
    return p.evaluate(point)


def poly_derivative(p: Polynomial, var: int) -> Polynomial:
    return p.derivative(var)


__all__ = [
    "BACKEND",
    "Polynomial",
    "RationalFunction",
    "as_rational",
    "format_polynomial",
    "format_rational_function",
    "poly_arith",
    "poly_derivative",
    "poly_eval",
    "random_point",
    "rf_arith",
    "rf_equal",
    "rf_substitute",
    "variables",
]
