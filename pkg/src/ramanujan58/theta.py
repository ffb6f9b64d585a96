"""Jacobi theta functions of one real nome and the nome/modulus maps."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import EllipticModulus, agm_KE, _modulus
from .numeric_kernel import (
    DomainError,
    GUARD_DIGITS,
    PrecisionReal,
    as_precision,
    kernel_exp,
    kernel_pi,
    kernel_sqrt,
    real,
)


@dataclass(frozen=True)
class Nome:
    q: PrecisionReal

    def __post_init__(self):
        if self.q.sign() < 0 or self.q >= 1:
            raise DomainError(f"nome must lie in [0, 1), got {self.q}")


def _nome(q, p) -> PrecisionReal:
    if isinstance(q, Nome):
        q = q.q
    q = real(q, as_precision(p).guarded())
    Nome(q)
    return q


def truncation_index(q: float, digits: int, offset: float = 0.0) -> int:
    """Least N with q^((N + offset)^2) / (1 - q) below 10^-(digits + guard)."""
    if q == 0:
        return 0
    target = (digits + GUARD_DIGITS) * math.log(10) + math.log(1 / (1 - q))
    n = math.sqrt(target / -math.log(q)) - offset
    return max(1, math.ceil(n))


def _qfloat(q: PrecisionReal) -> float:
    v = float(q)
    return v if v > 0 else 0.0


def theta3(q, p) -> PrecisionReal:
    """``1 + 2 sum_{n>=1} q^(n^2)``."""
    p = as_precision(p)
    q = _nome(q, p)
    N = truncation_index(_qfloat(q), p.digits)
    total = real(0, q.precision)
    qn2 = q            # q^(n^2)
    step = q * q * q   # q^(2n + 1)
    q2 = q * q
    for _ in range(N):
        total += qn2
        qn2 *= step
        step *= q2
    return (1 + 2 * total).with_precision(p)


def theta4(q, p) -> PrecisionReal:
    """``1 + 2 sum_{n>=1} (-1)^n q^(n^2)``, i.e. theta3(-q)."""
    p = as_precision(p)
    q = _nome(q, p)
    N = truncation_index(_qfloat(q), p.digits)
    total = real(0, q.precision)
    qn2, step, q2 = q, q * q * q, q * q
    sign = -1
    for _ in range(N):
        total += sign * qn2
        sign = -sign
        qn2 *= step
        step *= q2
    return (1 + 2 * total).with_precision(p)


def theta2(q, p) -> PrecisionReal:
    """``sum_n q^((n + 1/2)^2) = 2 q^(1/4) sum_{n>=0} q^(n(n+1))``."""
    p = as_precision(p)
    q = _nome(q, p)
    if q.sign() == 0:
        return real(0, p)
    N = truncation_index(_qfloat(q), p.digits, offset=0.5)
    total = real(0, q.precision)
    qnn = real(1, q.precision)  # q^(n(n+1))
    step = q * q                # q^(2(n+1))
    q2 = q * q
    for _ in range(N + 1):
        total += qnn
        qnn *= step
        step *= q2
    return (2 * kernel_sqrt(kernel_sqrt(q)) * total).with_precision(p)


def nome_from_k(m, p) -> Nome:
    """``q = exp(-pi K'(k) / K(k))``."""
    p = as_precision(p)
    m = _modulus(m, p)
    if m.k.sign() == 0 or m.kprime.sign() == 0:
        raise DomainError("the nome is only defined for 0 < k < 1")
    wp = p.guarded()
    K, _ = agm_KE(m, wp)
    Kp, _ = agm_KE(m.swapped(), wp)
    return Nome(kernel_exp(-kernel_pi(wp) * Kp / K).with_precision(p))


def k_from_q(q, p) -> EllipticModulus:
    """``k = theta2^2 / theta3^2`` and ``k' = theta4^2 / theta3^2``."""
    p = as_precision(p)
    wp = p.guarded()
    qv = _nome(q, wp)
    if qv.sign() == 0:
        # limit value
        return EllipticModulus(real(0, p), real(1, p))
    t2, t3, t4 = theta2(qv, wp), theta3(qv, wp), theta4(qv, wp)
    t3sq = t3 * t3
    return EllipticModulus((t2 * t2 / t3sq).with_precision(p), (t4 * t4 / t3sq).with_precision(p))


def K_from_q(q, p) -> PrecisionReal:
    """``K = (pi/2) theta3(q)^2``."""
    p = as_precision(p)
    wp = p.guarded()
    t3 = theta3(_nome(q, wp), wp)
    return (kernel_pi(wp) / 2 * t3 * t3).with_precision(p)


def jacobi_quartic_residual(q, p) -> PrecisionReal:
    """``theta2^4 + theta4^4 - theta3^4``."""
    p = as_precision(p)
    wp = p.guarded()
    qv = _nome(q, wp)
    t2, t3, t4 = theta2(qv, wp), theta3(qv, wp), theta4(qv, wp)
    return (t2 ** 4 + t4 ** 4 - t3 ** 4).with_precision(p)
