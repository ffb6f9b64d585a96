"""Exact arithmetic in Q(sqrt d) and Q(sqrt r, sqrt s), Pell equations, units.

Coefficients are :class:`fractions.Fraction`, so equality is exact and
component-wise.  Real values are obtained only on request through
``to_real``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .numeric_kernel import DomainError, PrecisionReal, as_precision, kernel_sqrt, real

Rational = Fraction
Number = Union[int, Fraction]


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 1
    return True


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


# ---------------------------------------------------------------------------
# Q(sqrt d)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticSurd:
    """``a + b*sqrt(d)`` with rational ``a``, ``b`` and squarefree ``d > 1``."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", _q(self.a))
        object.__setattr__(self, "b", _q(self.b))
        if not is_squarefree(self.d) or self.d == 1:
            raise DomainError(f"d must be squarefree and > 1, got {self.d}")

    def _lift(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                raise DomainError(f"mixing Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(_q(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadraticSurd(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadraticSurd(self.a * o.a + self.d * self.b * o.b,
                             self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "QuadraticSurd":
        n = self.norm()
        if n == 0:
            raise DomainError("surd with zero norm has no inverse")
        c = self.conjugate()
        return QuadraticSurd(c.a / n, c.b / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        return surd_pow(self, n)

    def is_rational(self) -> bool:
        return self.b == 0

    def to_real(self, p) -> PrecisionReal:
        p = as_precision(p)
        wp = p.guarded()
        v = real(self.a, wp) + real(self.b, wp) * kernel_sqrt(real(self.d, wp))
        return v.with_precision(p)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.d})"


def surd_pow(u: QuadraticSurd, n: int) -> QuadraticSurd:
    """Exact power; negative exponents invert through the norm."""
    if n < 0:
        return surd_pow(u.inverse(), -n)
    result = QuadraticSurd(Fraction(1), Fraction(0), u.d)
    base = u
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


# ---------------------------------------------------------------------------
# Q(sqrt r, sqrt s)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BiquadraticSurd:
    """``c0 + c1*sqrt(r) + c2*sqrt(s) + c3*sqrt(r*s)``.

    ``r`` and ``s`` are distinct squarefree integers > 1.  The product of
    basis elements is reduced with ``sqrt(r)*sqrt(s) = sqrt(rs)`` and
    ``sqrt(rs)**2 = rs``; ``sqrt(r)*sqrt(rs) = r*sqrt(s)`` and so on.
    """

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction
    r: int = 2
    s: int = 29

    def __post_init__(self):
        for name in ("c0", "c1", "c2", "c3"):
            object.__setattr__(self, name, _q(getattr(self, name)))
        if self.r == self.s or not (is_squarefree(self.r) and is_squarefree(self.s)) \
                or min(self.r, self.s) < 2:
            raise DomainError(f"bad biquadratic basis r={self.r}, s={self.s}")
        if not is_squarefree(self.r * self.s // math.gcd(self.r, self.s) ** 2):
            raise DomainError("r*s must reduce to a squarefree radicand")
        if math.gcd(self.r, self.s) != 1:
            raise DomainError("r and s must be coprime")

    @classmethod
    def of(cls, x, r: int = 2, s: int = 29) -> "BiquadraticSurd":
        if isinstance(x, BiquadraticSurd):
            return x
        if isinstance(x, QuadraticSurd):
            if x.d == r:
                return cls(x.a, x.b, 0, 0, r, s)
            if x.d == s:
                return cls(x.a, 0, x.b, 0, r, s)
            if x.d == r * s:
                return cls(x.a, 0, 0, x.b, r, s)
            raise DomainError(f"sqrt({x.d}) is not in Q(sqrt {r}, sqrt {s})")
        return cls(_q(x), 0, 0, 0, r, s)

    @classmethod
    def sqrt_r(cls, r: int = 2, s: int = 29):
        return cls(0, 1, 0, 0, r, s)

    @classmethod
    def sqrt_s(cls, r: int = 2, s: int = 29):
        return cls(0, 0, 1, 0, r, s)

    @classmethod
    def sqrt_rs(cls, r: int = 2, s: int = 29):
        return cls(0, 0, 0, 1, r, s)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def _lift(self, other):
        if isinstance(other, (int, Fraction, QuadraticSurd, BiquadraticSurd)):
            o = BiquadraticSurd.of(other, self.r, self.s)
            if (o.r, o.s) != (self.r, self.s):
                raise DomainError("mixing different biquadratic fields")
            return o
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return BiquadraticSurd(*(x + y for x, y in zip(self.coeffs, o.coeffs)), self.r, self.s)

    __radd__ = __add__

    def __neg__(self):
        return BiquadraticSurd(*(-x for x in self.coeffs), self.r, self.s)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = o.coeffs
        r, s = self.r, self.s
        rs = r * s
        c0 = a0 * b0 + r * a1 * b1 + s * a2 * b2 + rs * a3 * b3
        c1 = a0 * b1 + a1 * b0 + s * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + r * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return BiquadraticSurd(c0, c1, c2, c3, r, s)

    __rmul__ = __mul__

    def conjugate_r(self) -> "BiquadraticSurd":
        """Image under sqrt(r) -> -sqrt(r)."""
        return BiquadraticSurd(self.c0, -self.c1, self.c2, -self.c3, self.r, self.s)

    def conjugate_s(self) -> "BiquadraticSurd":
        return BiquadraticSurd(self.c0, self.c1, -self.c2, -self.c3, self.r, self.s)

    def inverse(self) -> "BiquadraticSurd":
        # multiply by the three non-trivial conjugates; the product is rational
        c = self.conjugate_r() * self.conjugate_s() * self.conjugate_r().conjugate_s()
        n = self * c
        if not n.is_rational():
            raise AssertionError("norm computation did not land in Q")
        if n.c0 == 0:
            raise DomainError("zero has no inverse")
        return BiquadraticSurd(*(x / n.c0 for x in c.coeffs), self.r, self.s)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = BiquadraticSurd.of(1, self.r, self.s)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_rational(self) -> bool:
        return self.c1 == 0 and self.c2 == 0 and self.c3 == 0

    def to_real(self, p) -> PrecisionReal:
        p = as_precision(p)
        wp = p.guarded()
        sr = kernel_sqrt(real(self.r, wp))
        ss = kernel_sqrt(real(self.s, wp))
        v = (real(self.c0, wp) + real(self.c1, wp) * sr + real(self.c2, wp) * ss
             + real(self.c3, wp) * (sr * ss))
        return v.with_precision(p)

    def __str__(self):
        parts = []
        for c, rad in zip(self.coeffs, (None, self.r, self.s, self.r * self.s)):
            if c == 0:
                continue
            parts.append(str(c) if rad is None else f"{c}*sqrt({rad})")
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Pell equation and units
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    D: int
    norm_sign: int = 1

    def __post_init__(self):
        if self.x * self.x - self.D * self.y * self.y != self.norm_sign:
            raise AssertionError(f"{self.x}^2 - {self.D}*{self.y}^2 != {self.norm_sign}")

    def as_surd(self) -> QuadraticSurd:
        core, square = _squarefree_part(self.D)
        return QuadraticSurd(self.x, self.y * square, core)


def _squarefree_part(n: int) -> tuple[int, int]:
    """``n = core * square**2`` with ``core`` squarefree."""
    square = 1
    f = 2
    core = n
    while f * f <= core:
        while core % (f * f) == 0:
            core //= f * f
            square *= f
        f += 1
    return core, square


def sqrt_continued_fraction(D: int) -> tuple[int, list[int]]:
    """Leading term and one period of the continued fraction of sqrt(D)."""
    if D < 2 or is_square(D):
        raise DomainError(f"sqrt({D}) is rational")
    a0 = math.isqrt(D)
    m, d, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return a0, period


def pell_fundamental(D: int) -> PellSolution:
    """Least positive solution of ``x**2 - D*y**2 = 1``."""
    if D < 2 or is_square(D):
        raise DomainError(f"Pell equation needs a non-square D >= 2, got {D}")
    a0, period = sqrt_continued_fraction(D)
    # convergents over one period give x^2 - D y^2 = (-1)^len; two periods give +1
    terms = period[:-1] if len(period) % 2 == 0 else period + period[:-1]
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for a in terms:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return PellSolution(h, k, D, 1)


def pell_negative(D: int) -> PellSolution | None:
    """Least solution of ``x**2 - D*y**2 = -1`` if one exists."""
    a0, period = sqrt_continued_fraction(D)
    if len(period) % 2 == 0:
        return None
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for a in period[:-1]:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return PellSolution(h, k, D, -1)


@dataclass(frozen=True)
class FundamentalUnit:
    """Fundamental unit ``eps`` of Q(sqrt d) and its norm-one power ``E``."""

    eps: QuadraticSurd
    norm_sign: int

    @property
    def E(self) -> QuadraticSurd:
        return self.eps if self.norm_sign == 1 else self.eps * self.eps


def fundamental_unit(d: int) -> FundamentalUnit:
    """Fundamental unit ``(a + b*sqrt d)/2`` for squarefree ``d = 1 (mod 4)``.

    Read off the continued fraction of ``omega = (1 + sqrt d)/2``: the first
    convergent ``p/q`` whose conjugate ``p - q*omega'`` has norm +-1 is the
    unit, i.e. ``eps = ((2p - q) + q*sqrt d)/2``.
    """
    if d <= 1 or d % 4 != 1 or not is_squarefree(d):
        raise DomainError(f"need squarefree d > 1 with d = 1 mod 4, got {d}")
    # continued fraction of omega = (1 + sqrt d)/2 via the (P + sqrt d)/Q form
    P, Q = 1, 2
    s = math.isqrt(d)
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    while True:
        a = (P + s) // Q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        # candidate eps = h - k*omega_bar = h - k*(1 - sqrt d)/2
        eps = QuadraticSurd(Fraction(2 * h - k, 2), Fraction(k, 2), d)
        n = eps.norm()
        if n in (1, -1):
            return FundamentalUnit(eps, int(n))
        P = a * Q - P
        Q = (d - P * P) // Q


# ---------------------------------------------------------------------------
# the d = 29 constants
# ---------------------------------------------------------------------------

U29 = QuadraticSurd(Fraction(5, 2), Fraction(1, 2), 29)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: str
    rhs: str
    passed: bool


def coincidence_checks() -> list[IdentityCheck]:
    """The exact integer and surd identities tying 9801, 396, 26390 to u_29."""
    u = U29
    u6 = surd_pow(u, 6)
    u_6 = surd_pow(u, -6)
    s = u6 + u_6
    lhs_i = 64 * s.a ** 2 if s.b == 0 else None
    checks = [
        IdentityCheck("2^6 (u^6 + u^-6)^2 = 396^4",
                      f"64*({s})^2 = {lhs_i}", str(396 ** 4),
                      s.b == 0 and lhs_i == 396 ** 4),
        IdentityCheck("26390 = 29*70*13", str(29 * 70 * 13), "26390", 29 * 70 * 13 == 26390),
        IdentityCheck("70^2 - 29*13^2 = -1", str(70 ** 2 - 29 * 13 ** 2), "-1",
                      70 ** 2 - 29 * 13 ** 2 == -1),
        IdentityCheck("9801^2 - 29*1820^2 = 1", str(9801 ** 2 - 29 * 1820 ** 2), "1",
                      9801 ** 2 - 29 * 1820 ** 2 == 1),
        IdentityCheck("u^3 = 70 + 13 sqrt 29", str(surd_pow(u, 3)), "70 + 13*sqrt(29)",
                      surd_pow(u, 3) == QuadraticSurd(70, 13, 29)),
        IdentityCheck("u^6 = 9801 + 1820 sqrt 29", str(u6), "9801 + 1820*sqrt(29)",
                      u6 == QuadraticSurd(9801, 1820, 29)),
    ]
    return checks
