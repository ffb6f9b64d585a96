"""Pochhammer symbols and the 2F1 / 3F2 series with rational parameters.

Series are summed in fixed-point integer arithmetic: each parameter ``a``
is an exact fraction ``p/q``, so ``(a + n)`` contributes the integer factor
``p + n q`` and the recurrence

    term[n+1] = term[n] * prod(upper + n) / prod(lower + n) * z / (n + 1)

costs a handful of big-integer products per step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from mpmath import libmp

from .numeric_kernel import (
    DomainError,
    GUARD_DIGITS,
    PrecisionReal,
    as_precision,
    kernel_pi,
    real,
)

Z_MAX = 0.9999
MAX_TERMS = 5_000_000


def pochhammer(q, n: int) -> Fraction:
    """Rising factorial ``q (q+1) ... (q+n-1)``, exact."""
    if n < 0:
        raise DomainError("Pochhammer index must be non-negative")
    q = Fraction(q)
    out = Fraction(1)
    for i in range(n):
        out *= q + i
    return out


@dataclass(frozen=True)
class FactorialIdentity:
    n: int
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def lemma_256(n: int) -> FactorialIdentity:
    """``(1/4)_n (1/2)_n (3/4)_n`` against ``(4n)! / (256^n n!)``."""
    lhs = pochhammer(Fraction(1, 4), n) * pochhammer(Fraction(1, 2), n) * pochhammer(Fraction(3, 4), n)
    rhs = Fraction(math.factorial(4 * n), 256 ** n * math.factorial(n))
    return FactorialIdentity(n, lhs, rhs)


@dataclass(frozen=True)
class HyperSeriesSpec:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: PrecisionReal = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        for b in self.lower:
            if b <= 0 and b.denominator == 1:
                raise DomainError(f"lower parameter {b} is a non-positive integer")
        if abs(float(self.z)) > Z_MAX:
            raise DomainError(f"|z| = {float(abs(self.z))} exceeds z_max = {Z_MAX}")


def _hyp(upper: Sequence[Fraction], lower: Sequence[Fraction], z, p) -> PrecisionReal:
    p = as_precision(p)
    spec = HyperSeriesSpec(tuple(upper), tuple(lower), real(z, p.guarded()))
    digits = p.digits + GUARD_DIGITS + 7  # room for up to 1e7 rounded steps
    bits = int(math.ceil(digits * math.log2(10))) + 8
    one = 1 << bits
    zfix = libmp.to_fixed(real(spec.z, digits)._mpf_, bits)
    if zfix == 0:
        return real(1, p)
    eps = 1 << (bits - int(math.ceil((p.digits + GUARD_DIGITS) * math.log2(10))))
    ups = [(a.numerator, a.denominator) for a in spec.upper]
    lows = [(b.numerator, b.denominator) for b in spec.lower]
    zabs = abs(float(spec.z))
    term = one
    total = one
    n = 0
    while True:
        num = 1
        den = n + 1
        for a, b in ups:
            num *= a + n * b
            den *= b
        for a, b in lows:
            num *= b
            den *= a + n * b
        if num == 0:
            break  # terminating series
        term = term * num * zfix // (den << bits)
        total += term
        n += 1
        ratio = abs(num / den) * zabs
        if ratio < 1:
            rho = max(ratio, zabs)
            if abs(term) * rho < eps * (1 - rho):
                break
        if n > MAX_TERMS:
            raise DomainError("hypergeometric series did not converge within the term budget")
    return PrecisionReal._make(libmp.from_man_exp(total, -bits, p.bits(), libmp.round_nearest), p)


def eval_2F1(a, b, c, z, p) -> PrecisionReal:
    return _hyp((a, b), (c,), z, p)


def eval_3F2(a, b, c, d, e, z, p) -> PrecisionReal:
    return _hyp((a, b, c), (d, e), z, p)


def eval_hyper(spec: HyperSeriesSpec, p) -> PrecisionReal:
    return _hyp(spec.upper, spec.lower, spec.z, p)


Q = Fraction(1, 4)
H = Fraction(1, 2)
TQ = Fraction(3, 4)


def _kk_arg(k, p):
    p = as_precision(p)
    wp = p.guarded()
    k = real(k, wp)
    if k.sign() < 0 or k * k > Fraction(1, 2):
        raise DomainError("identity branch requires 0 <= k <= 1/sqrt(2)")
    kp2 = 1 - k * k
    return k, 4 * k * k * kp2, wp


def kummer_check(k, p) -> PrecisionReal:
    """``2F1(1/4,1/4;1;(2kk')^2) - 2F1(1/2,1/2;1;k^2)``."""
    k, z, wp = _kk_arg(k, p)
    return (eval_2F1(Q, Q, 1, z, wp) - eval_2F1(H, H, 1, k * k, wp)).with_precision(p)


def clausen_check(k, p) -> PrecisionReal:
    """``2F1(1/4,1/4;1;z)^2 - 3F2(1/2,1/2,1/2;1,1;z)`` at ``z = (2kk')^2``."""
    k, z, wp = _kk_arg(k, p)
    f = eval_2F1(Q, Q, 1, z, wp)
    return (f * f - eval_3F2(H, H, H, 1, 1, z, wp)).with_precision(p)


def K_via_2F1(k, p) -> PrecisionReal:
    """``(pi/2) 2F1(1/4,1/4;1;(2kk')^2)`` for k <= 1/sqrt(2)."""
    k, z, wp = _kk_arg(k, p)
    return (kernel_pi(wp) / 2 * eval_2F1(Q, Q, 1, z, wp)).with_precision(p)


def K2_via_3F2(k, p) -> PrecisionReal:
    """``3F2(1/2,1/2,1/2;1,1;(2kk')^2)``, equal to ``((2/pi) K)^2``."""
    k, z, wp = _kk_arg(k, p)
    return eval_3F2(H, H, H, 1, 1, z, wp).with_precision(p)


PRINTED_PREFACTOR = "printed"
EMPIRICAL_PREFACTOR = "empirical"


def _g_args(g, p):
    from .invariants import k_from_g

    p = as_precision(p)
    wp = p.guarded()
    g = real(g, wp)
    if g <= 1:
        raise DomainError("g must exceed 1 so that the 3F2 argument is below 1")
    g12 = g ** 12
    x = 2 / (g12 + 1 / g12)
    k = k_from_g(g, wp).k
    return k, x, wp


def K2_from_g(g, p, prefactor: str = EMPIRICAL_PREFACTOR) -> PrecisionReal:
    """``m(k) * 3F2(1/4,3/4,1/2;1,1;x^2)`` with ``x = 2/(g^12 + g^-12)``.

    ``prefactor='empirical'`` uses ``m = 1/(1 + k^2)``, the factor that makes
    the identity with ``((2/pi) K(k))^2`` hold; ``'printed'`` uses ``1/k^2``.
    """
    k, x, wp = _g_args(g, p)
    F = eval_3F2(Q, TQ, H, 1, 1, x * x, wp)
    if prefactor == EMPIRICAL_PREFACTOR:
        m = 1 / (1 + k * k)
    elif prefactor == PRINTED_PREFACTOR:
        m = 1 / (k * k)
    else:
        raise DomainError(f"unknown prefactor {prefactor!r}")
    return (m * F).with_precision(p)


@dataclass(frozen=True)
class PrefactorReport:
    g: PrecisionReal
    k: PrecisionReal
    lhs: PrecisionReal                 # ((2/pi) K(k))^2
    hyper: PrecisionReal               # the bare 3F2 value
    printed_residual: PrecisionReal    # lhs - F / k^2
    empirical_residual: PrecisionReal  # lhs - F / (1 + k^2)
    implied_prefactor: PrecisionReal   # lhs / F


def adjudicate_prefactor(g, p) -> PrefactorReport:
    """Compare both candidate prefactors against ``((2/pi) K(k))^2``."""
    from .elliptic import ell_K

    k, x, wp = _g_args(g, p)
    F = eval_3F2(Q, TQ, H, 1, 1, x * x, wp)
    lhs = (2 * ell_K(k, wp) / kernel_pi(wp)) ** 2
    p = as_precision(p)
    return PrefactorReport(
        g=real(g, p), k=k.with_precision(p), lhs=lhs.with_precision(p), hyper=F.with_precision(p),
        printed_residual=(lhs - F / (k * k)).with_precision(p),
        empirical_residual=(lhs - F / (1 + k * k)).with_precision(p),
        implied_prefactor=(lhs / F).with_precision(p),
    )
