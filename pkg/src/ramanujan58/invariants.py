"""Ramanujan's g-invariant, singular moduli, alpha(r) and the level-58 data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .elliptic import EllipticModulus, _modulus, agm_KE, ell_dK_dk
from .exact_field import U29, BiquadraticSurd, QuadraticSurd, surd_pow
from .numeric_kernel import (
    DomainError,
    PrecisionReal,
    as_precision,
    kernel_exp,
    kernel_log,
    kernel_pi,
    kernel_root,
    kernel_sqrt,
    real,
)
from .theta import k_from_q


def _sqrt_of(r, wp) -> PrecisionReal:
    return kernel_sqrt(real(Fraction(r), wp))


def g_from_k(m, p) -> PrecisionReal:
    """``g = (k'^2 / (2k))^(1/12)``."""
    p = as_precision(p)
    m = _modulus(m, p)
    if m.k.sign() == 0 or m.kprime.sign() == 0:
        raise DomainError("g is only defined for 0 < k < 1")
    return kernel_root(m.kprime * m.kprime / (2 * m.k), 12).with_precision(p)


def k_from_g(g, p) -> EllipticModulus:
    """``k = g^6 sqrt(g^12 + g^-12) - g^12``."""
    p = as_precision(p)
    g = real(g, p)
    # cancellation costs about 12*log10(g) digits when g is large
    lost = max(0, int(12 * max(float(kernel_log(g)), 0) / 2.302585) + 2)
    wp = p.guarded(10 + lost)
    g = g.with_precision(wp)
    if g.sign() <= 0:
        raise DomainError("g must be positive")
    g6 = g ** 6
    g12 = g6 * g6
    k = g6 * kernel_sqrt(g12 + 1 / g12) - g12
    if k.sign() <= 0 or k >= 1:
        # k = sqrt(1 + g^24) - g^12 lies in (0, 1) for every g > 0; only precision loss lands here
        raise DomainError(f"g = {g.to_str(15)} is too large for precision {p.digits}")
    return EllipticModulus.from_k(k, p)


def g_product(n, p) -> PrecisionReal:
    """``g_n = 2^(-1/4) e^(pi sqrt(n)/24) prod_{k odd} (1 - e^(-k pi sqrt n))``."""
    p = as_precision(p)
    n = Fraction(n)
    if n < 1:
        raise DomainError("the product is used for n >= 1")
    wp = p.guarded()
    s = kernel_pi(wp) * _sqrt_of(n, wp)
    q = kernel_exp(-s)
    q2 = q * q
    eps = Fraction(1, 10 ** wp.digits)
    prod = real(1, wp)
    qk = q
    while qk > eps:
        prod *= 1 - qk
        qk *= q2
    return (prod * kernel_exp(s / 24) / kernel_root(real(2, wp), 4)).with_precision(p)


def lambda_star(r, p) -> EllipticModulus:
    """Singular modulus: ``k`` at the nome ``exp(-pi sqrt r)``."""
    p = as_precision(p)
    r = Fraction(r)
    if r <= 0:
        raise DomainError("r must be positive")
    wp = p.guarded()
    q = kernel_exp(-kernel_pi(wp) * _sqrt_of(r, wp))
    m = k_from_q(q, wp)
    return EllipticModulus(m.k.with_precision(p), m.kprime.with_precision(p))


def lambda_star_bisection(r, p, iterations: int | None = None) -> PrecisionReal:
    """Oracle for ``lambda_star``: bisect ``K'(k)/K(k) = sqrt r`` over log k."""
    p = as_precision(p)
    wp = p.guarded()
    target = _sqrt_of(r, wp)

    def ratio(k):
        m = EllipticModulus.from_k(k, wp)
        K, _ = agm_KE(m, wp)
        Kp, _ = agm_KE(m.swapped(), wp)
        return Kp / K

    # K'/K is decreasing in k; bracket in log-space, then finish linearly
    lo, hi = real(Fraction(1, 10 ** 60), wp), real(Fraction(1, 2) if r >= 1 else Fraction(999, 1000), wp)
    if r < 1:
        lo = real(Fraction(1, 2), wp)
    n = iterations or int((p.digits + 12) * 3.33) + 80
    for _ in range(n):
        mid = kernel_sqrt(lo * hi) if hi / lo > 4 else (lo + hi) / 2
        if ratio(mid) > target:
            lo = mid
        else:
            hi = mid
    return ((lo + hi) / 2).with_precision(p)


def alpha(r, p, route: str = "modulus") -> PrecisionReal:
    """Singular value function of the second kind.

    ``route='modulus'``: ``pi/(4K^2) - sqrt(r) (E/K - 1)``.
    ``route='complementary'``: ``E'/K - pi/(4K^2)``.
    """
    p = as_precision(p)
    wp = p.guarded()
    m = lambda_star(r, wp)
    K, E = agm_KE(m, wp)
    pi = kernel_pi(wp)
    if route == "modulus":
        v = pi / (4 * K * K) - _sqrt_of(r, wp) * (E / K - 1)
    elif route == "complementary":
        _, Ep = agm_KE(m.swapped(), wp)
        v = Ep / K - pi / (4 * K * K)
    else:
        raise DomainError(f"unknown alpha route {route!r}")
    return v.with_precision(p)


def alpha_limit_bound(r, p) -> tuple[PrecisionReal, PrecisionReal]:
    """``(alpha(r) - 1/pi, 16 sqrt(r) e^(-pi sqrt r))``."""
    p = as_precision(p)
    wp = p.guarded()
    s = _sqrt_of(r, wp)
    gap = alpha(r, wp) - 1 / kernel_pi(wp)
    bound = 16 * s * kernel_exp(-kernel_pi(wp) * s)
    return gap.with_precision(p), bound.with_precision(p)


def master_identity(r, p) -> PrecisionReal:
    """Right side of the 1/pi identity in k = lambda*(r), K, dK/dk and alpha(r)."""
    p = as_precision(p)
    wp = p.guarded()
    m = lambda_star(r, wp)
    k, kp = m.k, m.kprime
    K, _ = agm_KE(m, wp)
    dK = ell_dK_dk(m, wp)
    s = _sqrt_of(r, wp)
    two_pi = 2 / kernel_pi(wp)
    v = s * k * kp * kp * (two_pi * two_pi * K * dK) + (alpha(r, wp) - s * k * k) * (two_pi * K) ** 2
    return v.with_precision(p)


# ---------------------------------------------------------------------------
# level 58
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Exact58:
    """Exact field elements attached to the singular modulus of level 58."""

    g2: QuadraticSurd            # g^2 = u_29
    g12: QuadraticSurd           # u_29^6
    g_minus12: QuadraticSurd     # u_29^-6
    half_sum: QuadraticSurd      # (g^12 + g^-12)/2
    half_diff: QuadraticSurd     # (g^12 - g^-12)/2
    k: BiquadraticSurd
    x: BiquadraticSurd
    x_from_g: QuadraticSurd      # 2/(g^12 + g^-12)
    alpha: BiquadraticSurd
    A: BiquadraticSurd
    B: BiquadraticSurd


@lru_cache(maxsize=1)
def exact58() -> Exact58:
    sqrt2 = BiquadraticSurd.sqrt_r()
    sqrt29 = BiquadraticSurd.sqrt_s()
    sqrt58 = BiquadraticSurd.sqrt_rs()
    u = U29
    g12 = surd_pow(u, 6)
    g_12 = surd_pow(u, -6)
    k = (sqrt2 - 1) ** 6 * (13 * sqrt58 - 99)
    x = 4 * k * (1 - k * k) / (1 + k * k) ** 2
    alpha = 3 * BiquadraticSurd.of(surd_pow(u, 3)) * k * (33 * sqrt29 - 148)
    half_diff = (g12 - g_12) * Fraction(1, 2)
    A = alpha / (x * (1 + k * k)) - sqrt58 / (4 * BiquadraticSurd.of(g12))
    B = sqrt58 * BiquadraticSurd.of(half_diff)
    return Exact58(
        g2=u, g12=g12, g_minus12=g_12, half_sum=(g12 + g_12) * Fraction(1, 2), half_diff=half_diff,
        k=k, x=x, x_from_g=2 / (g12 + g_12), alpha=alpha, A=A, B=B,
    )


@dataclass(frozen=True)
class SingularValueContext:
    r: Fraction
    k_r: EllipticModulus
    g_r: PrecisionReal
    alpha_r: PrecisionReal
    x_r: object  # Fraction when known exactly, PrecisionReal otherwise
    exact: Exact58 | None = None

    @property
    def precision(self):
        return self.g_r.precision


def context(r, p) -> SingularValueContext:
    """Numeric singular-value data for level ``r`` (theta and AGM routes)."""
    p = as_precision(p)
    wp = p.guarded()
    m = lambda_star(r, wp)
    g = g_from_k(m, wp)
    g12 = g ** 12
    x = 2 / (g12 + 1 / g12)
    return SingularValueContext(
        r=Fraction(r),
        k_r=EllipticModulus(m.k.with_precision(p), m.kprime.with_precision(p)),
        g_r=g.with_precision(p),
        alpha_r=alpha(r, p),
        x_r=x.with_precision(p),
    )


def k58_closed(p) -> PrecisionReal:
    return exact58().k.to_real(p)


def g58_closed(p) -> PrecisionReal:
    p = as_precision(p)
    return kernel_sqrt(U29.to_real(p.guarded())).with_precision(p)


def alpha58_closed(p) -> PrecisionReal:
    """``3 g^6 k (33 sqrt 29 - 148)`` evaluated from its exact field element."""
    return exact58().alpha.to_real(p)


def context58(p) -> SingularValueContext:
    """Level-58 context assembled from exact forms, embedded at precision p."""
    p = as_precision(p)
    ex = exact58()
    if not ex.x.is_rational():
        raise AssertionError("x_58 must be rational")
    k = ex.k.to_real(p.guarded())
    return SingularValueContext(
        r=Fraction(58),
        k_r=EllipticModulus.from_k(k, p),
        g_r=g58_closed(p),
        alpha_r=alpha58_closed(p),
        x_r=ex.x.c0,
        exact=ex,
    )


@dataclass(frozen=True)
class SatoSeriesParams:
    """``1/pi = sum c_n (A + B n) x^(2n+1)`` with ``c_n = (1/4)_n (1/2)_n (3/4)_n / n!^3``."""

    A: PrecisionReal
    B: PrecisionReal
    x: object
    N: Fraction

    def __post_init__(self):
        if not (self.A.sign() > 0 and self.B.sign() > 0 and 0 < self.x < 1):
            raise DomainError("series parameters need A > 0, B > 0 and 0 < x < 1")


def sato_coefficients(ctx: SingularValueContext, p) -> SatoSeriesParams:
    """Bracket of the x_N series: ``A = alpha/(x(1+k^2)) - sqrt(N)/(4 g^12)``,
    ``B = sqrt(N) (g^12 - g^-12)/2``."""
    p = as_precision(p)
    wp = p.guarded()
    k = ctx.k_r.k.with_precision(wp)
    g12 = ctx.g_r.with_precision(wp) ** 12
    s = _sqrt_of(ctx.r, wp)
    x = real(ctx.x_r, wp)
    al = ctx.alpha_r.with_precision(wp)
    A = al / (x * (1 + k * k)) - s / (4 * g12)
    B = s * (g12 - 1 / g12) / 2
    return SatoSeriesParams(A.with_precision(p), B.with_precision(p), ctx.x_r, ctx.r)
