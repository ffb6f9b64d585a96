"""Precision-tagged real arithmetic.

Every value is an mpmath ``libmp`` float tuple paired with the number of
decimal digits it is meant to be accurate to.  All functions here call the
pure ``libmp`` routines with an explicit binary precision, so nothing touches
a global context and values can be shared freely between threads.

The reference value of pi comes from a Machin-type arctangent formula summed
in fixed-point integer arithmetic, which keeps it independent of every
series the rest of the package verifies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from mpmath import libmp

__all__ = [
    "GUARD_DIGITS",
    "DomainError",
    "DivergenceError",
    "SingularityError",
    "Precision",
    "PrecisionReal",
    "as_precision",
    "real",
    "guard_for_terms",
    "kernel_sqrt",
    "kernel_exp",
    "kernel_log",
    "kernel_atan",
    "kernel_sin",
    "kernel_cos",
    "kernel_root",
    "kernel_pi",
    "pi_oracle",
    "pi_oracle_alt",
    "pi_digits",
    "truncate_digits",
    "leibniz_partial",
]

GUARD_DIGITS = 10
_RND = libmp.round_nearest
_LOG2_10 = math.log2(10)


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class DivergenceError(DomainError):
    """The requested value is infinite (e.g. K(1))."""


class SingularityError(DomainError):
    """A formula divides by zero at the requested point."""


def guard_for_terms(nterms: int) -> int:
    """Guard digits for a composed computation of ``nterms`` rounded steps."""
    return GUARD_DIGITS + math.ceil(math.log10(max(nterms, 1)))


@dataclass(frozen=True, order=True)
class Precision:
    """Target accuracy in decimal digits."""

    digits: int

    def __post_init__(self):
        if not isinstance(self.digits, int) or self.digits < 1:
            raise DomainError(f"precision must be a positive integer, got {self.digits!r}")

    def bits(self, guard: int = GUARD_DIGITS) -> int:
        return int(math.ceil((self.digits + guard) * _LOG2_10)) + 4

    def guarded(self, extra: int = GUARD_DIGITS) -> "Precision":
        return Precision(self.digits + extra)

    @property
    def tolerance(self) -> Fraction:
        return Fraction(1, 10**self.digits)


PrecisionLike = Union[int, Precision]


def as_precision(p: PrecisionLike) -> Precision:
    return p if isinstance(p, Precision) else Precision(int(p))


def _raw(x, bits: int):
    """Convert an exact or float operand to a libmp tuple."""
    if isinstance(x, PrecisionReal):
        return x._v
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        return libmp.from_int(x)
    if isinstance(x, Fraction):
        return libmp.from_rational(x.numerator, x.denominator, bits, _RND)
    if isinstance(x, float):
        return libmp.from_float(x)
    if isinstance(x, str):
        return libmp.from_str(x, bits, _RND)
    # objects exposing an exact embedding (surds) or an mpmath mpf
    if hasattr(x, "_mpf_"):
        return x._mpf_
    raise TypeError(f"cannot use {type(x).__name__} as a real operand")


class PrecisionReal:
    """An arbitrary-precision real tagged with its target digit accuracy.

    Binary operations between two ``PrecisionReal`` values carry the smaller
    of the two precisions.  Exact operands (``int``, ``Fraction``) adopt the
    precision of the other side.  The ordering operators compare the stored
    values exactly; use :meth:`isclose` or :meth:`compare` when the answer
    must respect the accuracy of the operands.
    """

    __slots__ = ("_v", "precision")

    def __init__(self, value, precision: PrecisionLike):
        p = as_precision(precision)
        object.__setattr__(self, "precision", p)
        object.__setattr__(self, "_v", _round(_raw(value, p.bits()), p.bits()))

    def __setattr__(self, name, value):
        raise AttributeError("PrecisionReal is immutable")

    @classmethod
    def _make(cls, v, precision: Precision) -> "PrecisionReal":
        out = object.__new__(cls)
        object.__setattr__(out, "_v", v)
        object.__setattr__(out, "precision", precision)
        return out

    # -- properties -------------------------------------------------------
    @property
    def digits(self) -> int:
        return self.precision.digits

    @property
    def bits(self) -> int:
        return self.precision.bits()

    @property
    def _mpf_(self):
        return self._v

    def with_precision(self, p: PrecisionLike) -> "PrecisionReal":
        p = as_precision(p)
        return PrecisionReal._make(_round(self._v, p.bits()), p)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, PrecisionReal):
            p = min(self.precision, other.precision)
            return other._v, p
        try:
            return _raw(other, self.bits), self.precision
        except TypeError:
            return NotImplemented, None

    def _binary(self, other, fn, swap=False):
        ov, p = self._coerce(other)
        if ov is NotImplemented:
            return NotImplemented
        a, b = (ov, self._v) if swap else (self._v, ov)
        return PrecisionReal._make(fn(a, b, p.bits(), _RND), p)

    def __add__(self, other):
        return self._binary(other, libmp.mpf_add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, libmp.mpf_sub)

    def __rsub__(self, other):
        return self._binary(other, libmp.mpf_sub, swap=True)

    def __mul__(self, other):
        return self._binary(other, libmp.mpf_mul)

    __rmul__ = __mul__

    def __truediv__(self, other):
        ov, _ = self._coerce(other)
        if ov is not NotImplemented and ov == libmp.fzero:
            raise ZeroDivisionError("division by zero")
        return self._binary(other, libmp.mpf_div)

    def __rtruediv__(self, other):
        if self._v == libmp.fzero:
            raise ZeroDivisionError("division by zero")
        return self._binary(other, libmp.mpf_div, swap=True)

    def __pow__(self, n):
        if isinstance(n, int):
            if n < 0:
                return 1 / PrecisionReal._make(
                    libmp.mpf_pow_int(self._v, -n, self.bits, _RND), self.precision)
            return PrecisionReal._make(libmp.mpf_pow_int(self._v, n, self.bits, _RND),
                                       self.precision)
        if isinstance(n, Fraction) and n.denominator <= 64:
            return kernel_root(self, n.denominator) ** n.numerator
        return kernel_exp(kernel_log(self) * n)

    def __neg__(self):
        return PrecisionReal._make(libmp.mpf_neg(self._v), self.precision)

    def __pos__(self):
        return self

    def __abs__(self):
        return PrecisionReal._make(libmp.mpf_abs(self._v), self.precision)

    # -- comparison -------------------------------------------------------
    def _cmp_raw(self, other):
        ov, _ = self._coerce(other)
        if ov is NotImplemented:
            return NotImplemented
        return libmp.mpf_cmp(self._v, ov)

    def __eq__(self, other):
        c = self._cmp_raw(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp_raw(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp_raw(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp_raw(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp_raw(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        return hash((self._v, self.precision))

    def isclose(self, other, tol=None) -> bool:
        """``|self - other| <= tol``; tol defaults to 10**-min(precision)."""
        if tol is None:
            digits = self.digits
            if isinstance(other, PrecisionReal):
                digits = min(digits, other.digits)
            tol = Fraction(1, 10**digits)
        return abs(self - other) <= tol

    def compare(self, other, tol=None) -> int:
        """Three-way comparison that reports 0 inside the tolerance band."""
        if self.isclose(other, tol):
            return 0
        return -1 if self < other else 1

    # -- conversion -------------------------------------------------------
    def __float__(self):
        return libmp.to_float(self._v)

    def __int__(self):
        return int(libmp.to_int(self._v))

    def __bool__(self):
        return self._v != libmp.fzero

    def to_fraction(self) -> Fraction:
        man_exp = libmp.to_rational(self._v)
        return Fraction(int(man_exp[0]), int(man_exp[1]))

    def sign(self) -> int:
        return libmp.mpf_sign(self._v)

    def to_str(self, digits: int | None = None) -> str:
        """Decimal string rounded to ``digits`` significant digits."""
        return libmp.to_str(self._v, digits or self.digits)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"PrecisionReal({self.to_str()!r}, digits={self.digits})"


def _round(v, bits):
    return libmp.mpf_pos(v, bits, _RND)


def real(x, p: PrecisionLike) -> PrecisionReal:
    """Embed ``x`` (int, Fraction, str, float, surd or PrecisionReal) at precision ``p``."""
    p = as_precision(p)
    if hasattr(x, "to_real") and not isinstance(x, PrecisionReal):
        return x.to_real(p)
    return PrecisionReal(x, p)


# ---------------------------------------------------------------------------
# elementary functions
# ---------------------------------------------------------------------------

def kernel_sqrt(x: PrecisionReal) -> PrecisionReal:
    if x.sign() < 0:
        raise DomainError("square root of a negative number")
    return PrecisionReal._make(libmp.mpf_sqrt(x._v, x.bits, _RND), x.precision)


def kernel_root(x: PrecisionReal, n: int) -> PrecisionReal:
    """Real positive n-th root."""
    if x.sign() < 0:
        raise DomainError("root of a negative number")
    return PrecisionReal._make(libmp.mpf_nthroot(x._v, n, x.bits, _RND), x.precision)


def kernel_exp(x: PrecisionReal) -> PrecisionReal:
    # extra bits keep the absolute error of large arguments in budget
    extra = max(0, int(abs(float(x))).bit_length())
    return PrecisionReal._make(
        _round(libmp.mpf_exp(x._v, x.bits + extra, _RND), x.bits), x.precision)


def kernel_log(x: PrecisionReal) -> PrecisionReal:
    if x.sign() <= 0:
        raise DomainError("logarithm of a non-positive number")
    return PrecisionReal._make(libmp.mpf_log(x._v, x.bits, _RND), x.precision)


def kernel_atan(x: PrecisionReal) -> PrecisionReal:
    return PrecisionReal._make(libmp.mpf_atan(x._v, x.bits, _RND), x.precision)


def kernel_sin(x: PrecisionReal) -> PrecisionReal:
    return PrecisionReal._make(libmp.mpf_sin(x._v, x.bits, _RND), x.precision)


def kernel_cos(x: PrecisionReal) -> PrecisionReal:
    return PrecisionReal._make(libmp.mpf_cos(x._v, x.bits, _RND), x.precision)


# ---------------------------------------------------------------------------
# pi by Machin-type formulas, fixed-point integers
# ---------------------------------------------------------------------------

def _atan_inv(n: int, one: int) -> int:
    """``one * atan(1/n)`` by the alternating Gregory series, truncated."""
    total = term = one // n
    n2 = n * n
    k = 1
    sign = -1
    while term:
        term //= n2
        k += 2
        total += sign * (term // k)
        sign = -sign
    return total


def _machin_scaled(digits: int, formula: tuple[tuple[int, int], ...]) -> int:
    """Return floor-ish ``pi * 10**(digits + guard)`` and the guard used."""
    guard = guard_for_terms(digits)
    one = 10 ** (digits + guard)
    acc = 0
    for coeff, n in formula:
        acc += coeff * _atan_inv(n, one)
    return 4 * acc, guard


MACHIN = ((4, 5), (-1, 239))
GAUSS = ((12, 18), (8, 57), (-5, 239))


@lru_cache(maxsize=64)
def _pi_scaled(digits: int, formula=MACHIN) -> tuple[int, int]:
    return _machin_scaled(digits, formula)


def kernel_pi(p: PrecisionLike) -> PrecisionReal:
    """pi at precision ``p`` (Machin's formula)."""
    p = as_precision(p)
    scaled, guard = _pi_scaled(p.digits + GUARD_DIGITS)
    v = libmp.from_rational(scaled, 10 ** (p.digits + GUARD_DIGITS + guard), p.bits(), _RND)
    return PrecisionReal._make(v, p)


def pi_oracle(p: PrecisionLike) -> PrecisionReal:
    """Reference pi, independent of every series checked in this package."""
    return kernel_pi(p)


def pi_oracle_alt(p: PrecisionLike) -> PrecisionReal:
    """pi from Gauss's three-term arctangent formula (second opinion on Machin)."""
    p = as_precision(p)
    scaled, guard = _pi_scaled(p.digits + GUARD_DIGITS, GAUSS)
    v = libmp.from_rational(scaled, 10 ** (p.digits + GUARD_DIGITS + guard), p.bits(), _RND)
    return PrecisionReal._make(v, p)


def int_to_decimal(n: int) -> str:
    """``str(n)`` for non-negative n of any size (split recursively by 10^k)."""
    if n < 10 ** 4000:
        return str(n)
    k = (len(bin(n)) - 2) * 30103 // 200000  # about half the digit count
    hi, lo = divmod(n, 10 ** k)
    return int_to_decimal(hi) + int_to_decimal(lo).rjust(k, "0")


def truncate_digits(scaled: int, scale_digits: int, digits: int) -> str:
    """Format ``scaled / 10**scale_digits`` (value in [1, 10)) truncated.

    Produces ``digits`` significant digits but never fewer than one digit after
    the decimal point.
    """
    s = int_to_decimal(scaled)
    if len(s) != scale_digits + 1:
        raise ValueError("expected a value in [1, 10)")
    frac = max(digits - 1, 1)
    return s[0] + "." + s[1:1 + frac]


def pi_digits(digits: int, method: str = "oracle") -> str:
    """Decimal string of pi truncated to ``digits`` significant digits."""
    if method == "oracle":
        scaled, guard = _pi_scaled(digits + GUARD_DIGITS)
        return truncate_digits(scaled, digits + GUARD_DIGITS + guard, digits)
    if method == "ramanujan":
        from .pi_engine import pi_ramanujan_string
        return pi_ramanujan_string(digits)
    raise DomainError(f"unknown method {method!r}")


def leibniz_partial(nterms: int) -> float:
    """``4 * sum_{n < nterms} (-1)**n / (2n + 1)`` in double precision."""
    return 4 * math.fsum((-1) ** n / (2 * n + 1) for n in range(nterms))
