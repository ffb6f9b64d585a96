"""Shared oracle helpers.

The oracle is mpmath's high-level API (``mpmath.mp``) in a fresh context,
which is independent of the libmp-level arithmetic the package builds on.
"""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def oracle(digits=50):
    ctx = mpmath.MPContext()
    ctx.dps = digits
    return ctx


def close(value, expected, tol):
    """``|value - expected| <= tol`` with value a PrecisionReal or float and expected a string."""
    exact = value.to_fraction() if hasattr(value, "to_fraction") else Fraction(value)
    return abs(exact - Fraction(expected)) <= Fraction(tol)


@pytest.fixture
def mp():
    return oracle()
