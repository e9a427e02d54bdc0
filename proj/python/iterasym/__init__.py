"""Exact coefficient towers and asymptotic expansions for iterated maps."""

from fractions import Fraction

from ._core import (
    ConvergenceError,
    DomainError,
    ParseError,
    PrecisionError,
    ValidationError,
    coefficients,
    estimate_c,
    expand,
    kindred_ok,
    list_functions,
    polynomials,
    run_cli,
    verify,
)

__version__ = "0.1.0"


def fractions(values):
    """["p/q", ...] -> [Fraction, ...]"""
    return [Fraction(v) for v in values]


__all__ = [
    "ConvergenceError",
    "DomainError",
    "ParseError",
    "PrecisionError",
    "ValidationError",
    "coefficients",
    "estimate_c",
    "expand",
    "fractions",
    "kindred_ok",
    "list_functions",
    "polynomials",
    "run_cli",
    "verify",
]
