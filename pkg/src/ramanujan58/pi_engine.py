"""Ramanujan's 1/pi series at level 58, and pi from it by binary splitting.

The series is

    1/pi = (2 sqrt 2 / 9801) sum_n (1103 + 26390 n) (4n)! / (n!^4 396^(4n))

Consecutive terms share the factor ``(4n-3)(4n-2)(4n-1)(4n) / (n^4 396^4)``,
so the partial sum is an exact rational ``T / Q`` built from integer
products over a balanced split tree.  Only the final ``sqrt 2`` and one
division touch real arithmetic.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from mpmath import libmp

from .hyper import pochhammer
from .invariants import SatoSeriesParams, context58, sato_coefficients
from .numeric_kernel import (
    GUARD_DIGITS,
    DomainError,
    PrecisionReal,
    as_precision,
    kernel_log,
    kernel_pi,
    kernel_sqrt,
    pi_oracle,
    real,
    truncate_digits,
)

try:  # big-integer products are several times faster with GMP
    from gmpy2 import isqrt as _isqrt, mpz as _int
except ImportError:  # pragma: no cover
    _int = int
    _isqrt = math.isqrt

__all__ = [
    "SatoSeriesParams",
    "LiteralRamanujanTerm",
    "TermwiseRow",
    "termwise_equivalence",
    "split_sum",
    "naive_partial_sum",
    "terms_for_digits",
    "pi_ramanujan",
    "pi_ramanujan_string",
    "digits_per_term",
    "sanity_series",
    "sato_series_sum",
    "printed_form_terms",
]

C4 = 396 ** 4            # 24591257856 = 256 * 9801^2
MAX_DIGITS = 10 ** 5
DIGITS_PER_TERM = 7.98


@dataclass(frozen=True)
class LiteralRamanujanTerm:
    """``(1103 + 26390 n) (4n)! / (n!^4 396^(4n))`` as an exact fraction."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("term index must be non-negative")

    @property
    def numerator(self) -> int:
        return (26390 * self.n + 1103) * math.factorial(4 * self.n)

    @property
    def denominator(self) -> int:
        return math.factorial(self.n) ** 4 * 396 ** (4 * self.n)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def scaled(self, p) -> PrecisionReal:
        """The term times ``2 sqrt 2 / 9801``."""
        p = as_precision(p)
        wp = p.guarded()
        return (2 * kernel_sqrt(real(2, wp)) / 9801 * self.value).with_precision(p)


# ---------------------------------------------------------------------------
# termwise equivalence with the assembled hypergeometric form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermwiseRow:
    n: int
    assembled: PrecisionReal
    literal: PrecisionReal
    ratio: PrecisionReal


def _sato_coefficient(n: int) -> Fraction:
    q, h, t = Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)
    return pochhammer(q, n) * pochhammer(h, n) * pochhammer(t, n) / math.factorial(n) ** 3


def termwise_equivalence(nmax: int, p) -> list[TermwiseRow]:
    """Compare ``c_n (A + B n) x^(2n+1)`` at level 58 with the literal terms.

    ``A`` and ``B`` come from the singular-value data (alpha, k, g) embedded
    at precision ``p``; the literal side is exact up to the final ``sqrt 2``.
    """
    if nmax < 3:
        raise DomainError("nmax must be at least 3")
    p = as_precision(p)
    wp = p.guarded()
    params = sato_coefficients(context58(wp), wp)
    x = Fraction(params.x)
    rows = []
    for n in range(nmax + 1):
        assembled = _sato_coefficient(n) * x ** (2 * n + 1) * (params.A + params.B * n)
        literal = LiteralRamanujanTerm(n).scaled(wp)
        rows.append(TermwiseRow(n, assembled.with_precision(p), literal.with_precision(p),
                                (assembled / literal).with_precision(p)))
    return rows


def prefactor_scaling_holds(nmax: int = 10) -> bool:
    """``256^n 9801^(2n) == 396^(4n)`` for every n <= nmax."""
    return all(256 ** n * 9801 ** (2 * n) == 396 ** (4 * n) for n in range(nmax + 1))


# ---------------------------------------------------------------------------
# binary splitting
# ---------------------------------------------------------------------------

def _pqt(a: int, b: int):
    """``P, Q, T`` over terms ``a <= n < b``.

    ``T / Q`` equals ``sum_{a<=n<b} (1103 + 26390 n) prod_{j=a}^{n} p(j)/q(j)``
    with ``p(j) = (4j-3)(4j-2)(4j-1)(4j)``, ``q(j) = j^4 396^4`` and
    ``p(0) = q(0) = 1``.
    """
    if b - a == 1:
        if a == 0:
            P = Q = _int(1)
        else:
            P = _int((4 * a - 3) * (4 * a - 2) * (4 * a - 1) * (4 * a))
            Q = _int(a) ** 4 * C4
        return P, Q, P * (1103 + 26390 * a)
    m = (a + b) // 2
    P1, Q1, T1 = _pqt(a, m)
    P2, Q2, T2 = _pqt(m, b)
    return P1 * P2, Q1 * Q2, T1 * Q2 + P1 * T2


def _merge(parts):
    P, Q, T = parts[0]
    for P2, Q2, T2 in parts[1:]:
        P, Q, T = P * P2, Q * Q2, T * Q2 + P * T2
    return P, Q, T


def split_sum(nterms: int, workers: int = 1) -> tuple[int, int]:
    """``(T, Q)`` with ``T/Q`` the sum of the first ``nterms`` literal terms.

    With ``workers > 1`` the index range is cut into equal chunks that are
    split independently; chunks are merged left to right, so the integers
    returned never depend on scheduling.
    """
    if nterms < 1:
        raise DomainError("need at least one term")
    if workers <= 1 or nterms < 4 * workers:
        _, Q, T = _pqt(0, nterms)
    else:
        edges = [nterms * i // workers for i in range(workers + 1)]
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda i: _pqt(edges[i], edges[i + 1]), range(workers)))
        _, Q, T = _merge(parts)
    return int(T), int(Q)


def naive_partial_sum(nterms: int) -> Fraction:
    """Sum of the first ``nterms`` literal terms, one exact fraction at a time."""
    return sum((LiteralRamanujanTerm(n).value for n in range(nterms)), Fraction(0))


def terms_for_digits(digits: int) -> int:
    return math.ceil(digits / DIGITS_PER_TERM) + 2


def _check_digits(digits: int) -> None:
    if not isinstance(digits, int) or not 1 <= digits <= MAX_DIGITS:
        raise DomainError(f"digits must be an integer in [1, {MAX_DIGITS}], got {digits!r}")


def _pi_scaled(digits: int, workers: int = 1) -> tuple[int, int]:
    """``floor(pi * 10**D)`` and ``D``, with D = digits + guard."""
    D = digits + GUARD_DIGITS
    T, Q = split_sum(terms_for_digits(digits), workers)
    # pi = 9801 Q / (2 sqrt2 T) = 9801 Q / (sqrt8 T); sqrt8 * 10^D by integer sqrt
    scale = _int(10) ** D
    root8 = _isqrt(8 * scale * scale)
    return int(9801 * _int(Q) * scale * scale // (_int(T) * root8)), D


def pi_ramanujan(digits: int, workers: int = 1) -> PrecisionReal:
    """pi to ``digits`` digits from the level-58 series."""
    _check_digits(digits)
    scaled, D = _pi_scaled(digits, workers)
    p = as_precision(digits)
    return PrecisionReal._make(libmp.from_rational(scaled, 10 ** D, p.bits(), libmp.round_nearest), p)


def pi_ramanujan_string(digits: int, workers: int = 1) -> str:
    """Decimal string of pi truncated to ``digits`` significant digits."""
    _check_digits(digits)
    scaled, D = _pi_scaled(digits, workers)
    return truncate_digits(scaled, D, digits)


# ---------------------------------------------------------------------------
# convergence rate and elementary sanity series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConvergenceReport:
    analytic: PrecisionReal              # log10(396^4 / 256)
    error_ratios: tuple[float, ...]      # |S_{n+1} - 1/pi| / |S_n - 1/pi|
    digits_gained: tuple[float, ...]     # -log10 of each ratio


def digits_per_term(nsums: int = 10, p=200) -> ConvergenceReport:
    """Analytic and measured decimal digits gained per term."""
    p = as_precision(p)
    wp = p.guarded()
    analytic = kernel_log(real(Fraction(C4, 256), wp)) / kernel_log(real(10, wp))
    inv_pi = 1 / pi_oracle(wp)
    root = 2 * kernel_sqrt(real(2, wp)) / 9801
    errors = []
    partial = Fraction(0)
    for n in range(nsums):
        partial += LiteralRamanujanTerm(n).value
        errors.append(abs(root * partial - inv_pi))
    ratios = tuple(float(errors[i + 1] / errors[i]) for i in range(nsums - 1))
    return ConvergenceReport(analytic.with_precision(p), ratios,
                             tuple(-math.log10(r) for r in ratios))


@dataclass(frozen=True)
class SanityReport:
    N: int
    basel_raw: float
    basel_corrected: float
    basel_target: float
    leibniz_averaged: float
    leibniz_target: float


def sanity_series(N: int = 10 ** 4) -> SanityReport:
    """Basel and Leibniz partial sums, each with a cheap tail correction."""
    basel = math.fsum(1.0 / (n * n) for n in range(N, 0, -1))
    lb = [(-1) ** n / (2 * n + 1) for n in range(N + 1)]
    s_n = math.fsum(lb[:N])
    s_n1 = s_n + lb[N]
    return SanityReport(
        N=N,
        basel_raw=basel,
        basel_corrected=basel + 1.0 / N,
        basel_target=math.pi ** 2 / 6,
        leibniz_averaged=(s_n + s_n1) / 2,
        leibniz_target=math.pi / 4,
    )


def sato_series_sum(params: SatoSeriesParams, nterms: int, p) -> PrecisionReal:
    """``sum_{n < nterms} c_n (A + B n) x^(2n+1)``, an approximation to 1/pi."""
    p = as_precision(p)
    wp = p.guarded()
    x = real(params.x, wp)
    A, B = params.A.with_precision(wp), params.B.with_precision(wp)
    x2 = x * x
    xp = x
    total = real(0, wp)
    for n in range(nterms):
        total += _sato_coefficient(n) * (A + B * n) * xp
        xp *= x2
    return total.with_precision(p)


@dataclass(frozen=True)
class PrintedFormRow:
    n: int
    printed: PrecisionReal    # term with (4n)!/(n!)^2 and (g^2 - g^-12)/2
    corrected: PrecisionReal  # term with (4n)!/(n!)^4 and (g^12 - g^-12)/2


def printed_form_terms(nmax: int, p) -> list[PrintedFormRow]:
    """Terms of the assembled series as typeset, next to the consistent form.

    The two agree at n = 0 and differ from n = 1 on.
    """
    p = as_precision(p)
    wp = p.guarded()
    ctx = context58(wp)
    ex = ctx.exact
    s58 = kernel_sqrt(real(58, wp))
    g2 = ex.g2.to_real(wp)
    g12 = ex.g12.to_real(wp)
    A = sato_coefficients(ctx, wp).A
    B_printed = s58 * (g2 - 1 / g12) / 2
    B_fixed = s58 * (g12 - 1 / g12) / 2
    x = Fraction(ctx.x_r)
    rows = []
    for n in range(nmax + 1):
        base = Fraction(math.factorial(4 * n), 256 ** n) * x ** (2 * n + 1)
        printed = base / math.factorial(n) ** 2 * (A + B_printed * n)
        fixed = base / math.factorial(n) ** 4 * (A + B_fixed * n)
        rows.append(PrintedFormRow(n, printed.with_precision(p), fixed.with_precision(p)))
    return rows


def inverse_pi_error(nterms: int, p) -> PrecisionReal:
    """``(2 sqrt 2/9801) * partial_sum - 1/pi``, negative for every nterms."""
    p = as_precision(p)
    wp = p.guarded(20 + 8 * nterms)
    v = 2 * kernel_sqrt(real(2, wp)) / 9801 * naive_partial_sum(nterms) - 1 / kernel_pi(wp)
    return v.with_precision(p)
