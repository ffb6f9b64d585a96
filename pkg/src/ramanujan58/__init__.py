"""Ramanujan's level-58 series for 1/pi, verified step by step.

The package computes every object that enters the series (elliptic
integrals, theta functions, the g-invariant, singular moduli, L-values,
lattice sums) at a chosen decimal precision, checks each identity that links
them, and evaluates pi from the finished series by binary splitting.
"""

from .exact_field import BiquadraticSurd, QuadraticSurd, pell_fundamental
from .numeric_kernel import (
    DivergenceError,
    DomainError,
    Precision,
    PrecisionReal,
    SingularityError,
    pi_digits,
    pi_oracle,
)
from .pi_engine import pi_ramanujan, pi_ramanujan_string
from .verification import VerificationReport, run as verify

__all__ = [
    "BiquadraticSurd",
    "DivergenceError",
    "DomainError",
    "Precision",
    "PrecisionReal",
    "QuadraticSurd",
    "SingularityError",
    "VerificationReport",
    "pell_fundamental",
    "pi_digits",
    "pi_oracle",
    "pi_ramanujan",
    "pi_ramanujan_string",
    "verify",
]
