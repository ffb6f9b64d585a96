"""The alternating lattice sum S1(1, 0, r; 1) and its closed forms.

``s1_csch`` is the precision evaluator, built on the odd-index product for
the g-invariant.  ``s1_truncated`` sums the conditionally convergent double
series directly in a fixed order and is only a sanity check: its error
decays like 1/R.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .invariants import g58_closed
from .lseries import kronecker, l_class_number, l_negative
from .numeric_kernel import (
    DomainError,
    PrecisionReal,
    as_precision,
    kernel_exp,
    kernel_log,
    kernel_pi,
    kernel_sqrt,
    real,
)


@dataclass(frozen=True)
class LatticeSumSpec:
    a: int
    b: int
    c: int
    s: int = 1
    strategy: str = "truncated_symmetric"

    def __post_init__(self):
        if self.a <= 0 or 4 * self.a * self.c - self.b * self.b <= 0:
            raise DomainError(f"form ({self.a},{self.b},{self.c}) is not positive definite")
        if self.s != 1:
            raise DomainError("only s = 1 is supported")
        if self.strategy not in ("truncated_symmetric", "csch_product"):
            raise DomainError(f"unknown strategy {self.strategy!r}")


@dataclass(frozen=True)
class TruncatedSum:
    value: float
    tail_estimate: float
    R: int


def _row_sum(spec: LatticeSumSpec, n: int, R: int) -> float:
    m = np.arange(1, R + 1, dtype=np.float64)
    sign = np.where(np.arange(1, R + 1) % 2 == 0, 1.0, -1.0)
    # m and -m are paired: a m^2 + c n^2 is even in m when b = 0
    body = 2.0 * math.fsum(sign / (spec.a * m * m + spec.c * n * n))
    if n == 0:
        return body
    return body + 1.0 / (spec.c * n * n)


def _tail_estimate(spec: LatticeSumSpec, R: int) -> float:
    """Integral estimate of the part of every row beyond |m| = R."""
    # each row tail is about (-1)^(R+1) / (a (R+1/2)^2 + c n^2); integrate over n
    h = R + 0.5
    rho = math.sqrt(spec.c / spec.a)
    return (-1) ** (R + 1) * 2.0 * math.atan(rho * R / h) / (spec.a * h * rho)


def s1_truncated(spec: LatticeSumSpec, R: int, workers: int = 1) -> TruncatedSum:
    """Sum of ``(-1)^m / (a m^2 + c n^2)`` over ``0 < max(|m|,|n|) <= R``.

    Rows (fixed n) are independent and may be evaluated concurrently; they are
    always combined in the order n = -R, ..., R so the result does not depend
    on scheduling.
    """
    if spec.b != 0:
        raise DomainError("only b = 0 forms are supported")
    if R < 10:
        raise DomainError("truncation radius must be at least 10")
    rows = range(-R, R + 1)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            sums = list(pool.map(lambda n: _row_sum(spec, n, R), rows))
    else:
        sums = [_row_sum(spec, n, R) for n in rows]
    total = 0.0
    for s in sums:
        total += s
    return TruncatedSum(total, _tail_estimate(spec, R), R)


def s1_parity_average(spec: LatticeSumSpec, R: int) -> float:
    """Mean of the R and R+1 truncations; the leading 1/R tails cancel."""
    return 0.5 * (s1_truncated(spec, R).value + s1_truncated(spec, R + 1).value)


def log_2g4(r, p) -> PrecisionReal:
    """``log(2 g_r^4) = pi sqrt(r)/6 + 4 sum_{k odd} log(1 - e^(-k pi sqrt r))``."""
    p = as_precision(p)
    wp = p.guarded()
    s = kernel_pi(wp) * kernel_sqrt(real(Fraction(r), wp))
    q = kernel_exp(-s)
    q2 = q * q
    eps = Fraction(1, 10 ** wp.digits)
    total = s / 6
    qk = q
    while qk > eps:
        total += 4 * kernel_log(1 - qk)
        qk *= q2
    return total.with_precision(p)


def s1_csch(r, p) -> PrecisionReal:
    """``S1(1, 0, r; 1) = -(pi / sqrt r) log(2 g_r^4)``, geometric convergence."""
    p = as_precision(p)
    if Fraction(r) < 1:
        raise DomainError("r >= 1 required")
    wp = p.guarded()
    v = -kernel_pi(wp) / kernel_sqrt(real(Fraction(r), wp)) * log_2g4(r, wp)
    return v.with_precision(p)


def s1_rows_csch(r, p) -> PrecisionReal:
    """Row-by-row closed form: ``-pi^2/6 + (2 pi/sqrt r) sum_n csch(pi n sqrt r)/n``."""
    p = as_precision(p)
    wp = p.guarded()
    pi = kernel_pi(wp)
    sr = kernel_sqrt(real(Fraction(r), wp))
    eps = Fraction(1, 10 ** wp.digits)
    total = real(0, wp)
    n = 1
    while True:
        e = kernel_exp(-pi * n * sr)
        term = 2 * e / (1 - e * e) / n  # csch(x) = 2 e^-x / (1 - e^-2x)
        total += term
        if term < eps:
            break
        n += 1
    return (-pi * pi / 6 + 2 * pi / sr * total).with_precision(p)


def csch_series(z, nterms: int, p) -> PrecisionReal:
    """``2 sum_{n=1}^{N} e^(-(2n-1) z)``."""
    p = as_precision(p)
    wp = p.guarded()
    e = kernel_exp(-real(z, wp))
    e2 = e * e
    total = real(0, wp)
    t = e
    for _ in range(nterms):
        total += t
        t *= e2
    return (2 * total).with_precision(p)


def pi_csch_partial_fractions(z: float, nterms: int = 10 ** 5) -> float:
    """``1/z + sum_{k=1}^{N} 2 z (-1)^k / (z^2 + k^2)`` with even N plus half the next term."""
    k = np.arange(1, nterms + 1, dtype=np.float64)
    sign = np.where(np.arange(1, nterms + 1) % 2 == 0, 1.0, -1.0)
    terms = 2 * z * sign / (z * z + k * k)
    # alternating tail is about half the first omitted term
    nxt = 2 * z * (-1) ** (nterms + 1) / (z * z + (nterms + 1) ** 2)
    return 1 / z + math.fsum(terms) + 0.5 * nxt


def row_identities(nterms: int = 10 ** 6, r: float = 1.0) -> tuple[float, float]:
    """Direct sums of ``sum_{m != 0} 1/(r m^2)`` and ``sum_{k != 0} (-1)^k / k^2``.

    Both use the integral tail estimate beyond ``nterms``.
    """
    m = np.arange(1, nterms + 1, dtype=np.float64)
    plain = 2 * math.fsum(1.0 / (r * m * m)) + 2 / (r * (nterms + 0.5))
    sign = np.where(np.arange(1, nterms + 1) % 2 == 0, 1.0, -1.0)
    alt = 2 * math.fsum(sign / (m * m)) + 2 * (-1) ** (nterms + 1) * 0.5 / (nterms + 0.5) ** 2
    return plain, alt


@dataclass(frozen=True)
class ZuckerRobertson:
    P: int
    value: PrecisionReal              # (pi/sqrt(2P)) log 2 + 4 L_-8 L_P
    log2_term: PrecisionReal
    l_product: PrecisionReal          # L_-8(1) L_P(1), with L_-8 from the integer-sum formula
    literal_factor: Fraction          # 2^(1-t) sum over divisors mu of (1 - (2/mu) 2^(1-s))
    stated_factor: int                # 4
    literal_value: PrecisionReal      # (pi/sqrt(2P)) log 2 + literal_factor L_-8 L_P


def zucker_robertson(P: int, p) -> ZuckerRobertson:
    if P != 29:
        raise DomainError("only P = 29 is supported")
    p = as_precision(p)
    wp = p.guarded()
    t = 1  # number of prime factors of 29
    s = 1
    literal = Fraction(0)
    for mu in (1, P):
        literal += 1 - kronecker(2, mu) * Fraction(2) ** (1 - s)
    literal *= Fraction(2) ** (1 - t)
    log2_term = kernel_pi(wp) / kernel_sqrt(real(2 * P, wp)) * kernel_log(real(2, wp))
    prod = l_negative(-8, wp).value * l_class_number(P, 1, wp).value
    return ZuckerRobertson(
        P=P,
        value=(log2_term + 4 * prod).with_precision(p),
        log2_term=log2_term.with_precision(p),
        l_product=prod.with_precision(p),
        literal_factor=literal,
        stated_factor=4,
        literal_value=(log2_term + literal * prod).with_precision(p),
    )


@dataclass(frozen=True)
class WongReport:
    r: Fraction
    csch_value: PrecisionReal
    closed_residual: PrecisionReal          # s1_csch + (pi/sqrt r) log(2 g^4), computed via the rows route
    truncated: dict[int, float]
    differences: dict[int, float]           # |truncated(R) - csch|
    parity_averaged: dict[int, float]       # |mean(R, R+1) - csch|


def wong_check(r, p, radii=(50, 100, 200)) -> WongReport:
    p = as_precision(p)
    csch = s1_csch(r, p)
    rows = s1_rows_csch(r, p)
    spec = LatticeSumSpec(1, 0, int(r))
    truncated = {}
    diffs = {}
    averaged = {}
    target = float(csch)
    for R in radii:
        t0 = s1_truncated(spec, R).value
        t1 = s1_truncated(spec, R + 1).value
        truncated[R] = t0
        diffs[R] = abs(t0 - target)
        averaged[R] = abs(0.5 * (t0 + t1) - target)
    return WongReport(Fraction(r), csch, (csch - rows).with_precision(p), truncated, diffs, averaged)


def g58_l_value_residual(p) -> PrecisionReal:
    """``(pi/sqrt 58) log(g58^4) - 4 L_-8(1) L_29(1)``."""
    p = as_precision(p)
    wp = p.guarded()
    g = g58_closed(wp)
    lhs = kernel_pi(wp) / kernel_sqrt(real(58, wp)) * kernel_log(g ** 4)
    rhs = 4 * l_negative(-8, wp).value * l_class_number(29, 1, wp).value
    return (lhs - rhs).with_precision(p)
