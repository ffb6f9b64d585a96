"""Complete elliptic integrals K(k), E(k) and their relations.

The working evaluator is the arithmetic-geometric mean.  A tanh-sinh
quadrature of the defining integrals is kept alongside for cross-checks at
30 digits or fewer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .numeric_kernel import (
    DivergenceError,
    DomainError,
    PrecisionReal,
    SingularityError,
    as_precision,
    kernel_pi,
    kernel_sqrt,
    real,
)


@dataclass(frozen=True)
class EllipticModulus:
    """A modulus ``k`` in [0, 1] together with ``k' = sqrt(1 - k^2)``."""

    k: PrecisionReal
    kprime: PrecisionReal

    def __post_init__(self):
        if self.k.sign() < 0 or self.k > 1:
            raise DomainError(f"modulus outside [0, 1]: {self.k}")

    @classmethod
    def from_k(cls, k, p) -> "EllipticModulus":
        p = as_precision(p)
        k = real(k, p.guarded())
        if k.sign() < 0 or k > 1:
            raise DomainError(f"modulus outside [0, 1]: {k}")
        return cls(k.with_precision(p), kernel_sqrt(1 - k * k).with_precision(p))

    @classmethod
    def from_kprime(cls, kprime, p) -> "EllipticModulus":
        return cls.from_k(kprime, p).swapped()

    def swapped(self) -> "EllipticModulus":
        return EllipticModulus(self.kprime, self.k)

    @property
    def precision(self):
        return self.k.precision


def _modulus(m, p) -> EllipticModulus:
    if isinstance(m, EllipticModulus):
        if p is None:
            return m
        p = as_precision(p)
        return EllipticModulus(m.k.with_precision(p.guarded()), m.kprime.with_precision(p.guarded()))
    return EllipticModulus.from_k(m, as_precision(p).guarded())


def agm_KE(m, p) -> tuple[PrecisionReal, PrecisionReal]:
    """Return ``(K(k), E(k))`` by the AGM and its c-sequence.

    ``K = pi / (2 agm(1, k'))`` and ``E = K (1 - sum 2^(n-1) c_n^2)`` with
    ``c_0 = k``.
    """
    p = as_precision(p)
    m = _modulus(m, p)
    wp = p.guarded()
    k, kp = m.k.with_precision(wp), m.kprime.with_precision(wp)
    pi = kernel_pi(wp)
    if k.sign() == 0:
        half_pi = (pi / 2).with_precision(p)
        return half_pi, half_pi
    if kp.sign() == 0:
        raise DivergenceError("K(1) diverges")
    eps = Fraction(1, 10 ** (wp.digits + 2))
    a, b, c = real(1, wp), kp, k
    total = c * c / 2
    weight = 1
    while abs(c) > eps:
        a, b, c = (a + b) / 2, kernel_sqrt(a * b), (a - b) / 2
        total += weight * c * c
        weight *= 2
    K = pi / (2 * a)
    E = K * (1 - total)
    return K.with_precision(p), E.with_precision(p)


def ell_K(m, p) -> PrecisionReal:
    p = as_precision(p)
    m = _modulus(m, p)
    if m.kprime.sign() == 0:
        raise DivergenceError("K(1) diverges")
    return agm_KE(m, p)[0]


def ell_E(m, p) -> PrecisionReal:
    p = as_precision(p)
    m = _modulus(m, p)
    if m.kprime.sign() == 0:
        return real(1, p)
    return agm_KE(m, p)[1]


def _interior(m: EllipticModulus):
    if m.k.sign() == 0 or m.kprime.sign() == 0:
        raise SingularityError("derivative formulas are singular at k = 0 and k = 1")


def ell_dK_dk(m, p) -> PrecisionReal:
    """``dK/dk = (E - k'^2 K) / (k k'^2)``."""
    p = as_precision(p)
    m = _modulus(m, p)
    _interior(m)
    K, E = agm_KE(m, p.guarded())
    k, kp2 = m.k, m.kprime * m.kprime
    return ((E - kp2 * K) / (k * kp2)).with_precision(p)


def ell_dE_dk(m, p) -> PrecisionReal:
    """``dE/dk = (E - K) / k``."""
    p = as_precision(p)
    m = _modulus(m, p)
    _interior(m)
    K, E = agm_KE(m, p.guarded())
    return ((E - K) / m.k).with_precision(p)


def complementary(m, p) -> tuple[PrecisionReal, PrecisionReal]:
    """``(K'(k), E'(k)) = (K(k'), E(k'))``."""
    p = as_precision(p)
    m = _modulus(m, p)
    _interior(m)
    return agm_KE(m.swapped(), p)


def legendre_residual(m, p) -> PrecisionReal:
    """``K E' + E K' - K K' - pi/2``."""
    p = as_precision(p)
    m = _modulus(m, p)
    _interior(m)
    wp = p.guarded()
    K, E = agm_KE(m, wp)
    Kp, Ep = agm_KE(m.swapped(), wp)
    return (K * Ep + E * Kp - K * Kp - kernel_pi(wp) / 2).with_precision(p)


# ---------------------------------------------------------------------------
# quadrature oracle
# ---------------------------------------------------------------------------

QUADRATURE_MAX_DIGITS = 30


def _quad(integrand_kind: str, k, digits: int) -> PrecisionReal:
    if digits > QUADRATURE_MAX_DIGITS:
        raise DomainError("the quadrature oracle is only used at <= 30 digits")
    ctx = mpmath.MPContext()
    ctx.dps = digits + 15
    kk = ctx.mpf(real(k, digits + 15).to_str(digits + 15))
    if kk < 0 or kk > 1:
        raise DomainError("modulus outside [0, 1]")
    if integrand_kind == "K":
        if kk == 1:
            raise DivergenceError("K(1) diverges")
        f = lambda t: 1 / ctx.sqrt(1 - (kk * ctx.sin(t)) ** 2)
    else:
        f = lambda t: ctx.sqrt(1 - (kk * ctx.sin(t)) ** 2)
    v = ctx.quad(f, [0, ctx.pi / 4, ctx.pi / 2], method="tanh-sinh")
    return real(ctx.nstr(v, digits + 12, strip_zeros=False), digits)


def ell_K_quadrature(k, digits: int = 30) -> PrecisionReal:
    """K(k) by tanh-sinh quadrature of its defining integral."""
    return _quad("K", k, digits)


def ell_E_quadrature(k, digits: int = 30) -> PrecisionReal:
    return _quad("E", k, digits)
