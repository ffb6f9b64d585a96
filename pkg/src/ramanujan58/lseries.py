"""Kronecker symbols, quadratic Dirichlet characters and L_d(1).

Three closed routes are provided: the negative-discriminant formula with an
integer character sum, the sine-product quotient for d > 0, and the class
number formula.  A numeric route sums the Dirichlet series itself in whole
periods of the character.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exact_field import fundamental_unit, is_squarefree
from .numeric_kernel import (
    DomainError,
    PrecisionReal,
    as_precision,
    kernel_log,
    kernel_pi,
    kernel_sin,
    kernel_sqrt,
    real,
)


def kronecker(d: int, n: int) -> int:
    """The Kronecker symbol ``(d/n)``."""
    if n == 0:
        return 1 if abs(d) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -result
    # factor out 2s: (d/2) = 0 if d even, +1 if d = +-1 mod 8, -1 if d = +-3 mod 8
    v = (n & -n).bit_length() - 1
    if v:
        if d % 2 == 0:
            return 0
        if d % 8 in (3, 5) and v % 2 == 1:
            result = -result
        n >>= v
    # n odd positive: Jacobi symbol (d/n)
    a = d % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def character_modulus(d: int) -> int:
    """``|d|`` when d = 1 (mod 4), otherwise ``|4d|``."""
    if d == 0:
        raise DomainError("d must be non-zero")
    return abs(d) if d % 4 == 1 else abs(4 * d)


@dataclass(frozen=True)
class DirichletCharacter:
    d: int
    m: int
    values: tuple[int, ...]  # values[k - 1] = chi(k) for k = 1..m

    def __call__(self, a: int) -> int:
        return self.values[(a - 1) % self.m]

    def is_completely_multiplicative(self) -> bool:
        return all(self(a * b) == self(a) * self(b)
                   for a in range(1, self.m + 1) for b in range(1, self.m + 1))

    def vanishes_exactly_off_units(self) -> bool:
        return all((self(a) == 0) == (math.gcd(a, self.m) > 1) for a in range(1, self.m + 1))

    def is_periodic(self) -> bool:
        return all(kronecker(self.d, a) == self(a) for a in range(1, 3 * self.m + 1))

    def weighted_sum(self) -> int:
        """``sum_{k=1}^{m} k chi(k)``."""
        return sum(k * c for k, c in enumerate(self.values, start=1))


def character_table(d: int) -> DirichletCharacter:
    m = character_modulus(d)
    return DirichletCharacter(d, m, tuple(kronecker(d, k) for k in range(1, m + 1)))


@dataclass(frozen=True)
class LValue:
    d: int
    value: PrecisionReal
    route: str  # negative_closed | trig_product | class_number | partial_sum
    detail: str = ""


def conductor(d: int) -> int:
    """Least period of ``n -> (d/n)``; a divisor of the tabulated modulus."""
    m = character_modulus(d)
    for f in range(1, m + 1):
        if m % f == 0 and all(kronecker(d, a) == kronecker(d, a + f) for a in range(1, m + 1)):
            return f
    return m


def l_negative(d: int, p, modulus: str = "tabulated") -> LValue:
    """``pi / m^(3/2) * |1 + sum_{k=2}^{m} k chi(k)|``.

    ``modulus='tabulated'`` takes m = |d| or |4d| by the residue of d mod 4;
    ``modulus='conductor'`` takes the least period of the character.  The two
    agree when the tabulated modulus is primitive; for d = -8 (m = 32, period
    8) the tabulated value is half the sum of the Dirichlet series.
    """
    if d >= 0:
        raise DomainError("this route needs d < 0")
    p = as_precision(p)
    chi = character_table(d)
    if modulus == "conductor":
        f = conductor(d)
        chi = DirichletCharacter(d, f, chi.values[:f])
    elif modulus != "tabulated":
        raise DomainError(f"unknown modulus rule {modulus!r}")
    inner = abs(chi.weighted_sum())
    wp = p.guarded()
    m = real(chi.m, wp)
    v = kernel_pi(wp) * inner / (m * kernel_sqrt(m))
    return LValue(d, v.with_precision(p), "negative_closed", f"m={chi.m}, inner sum={inner}")


def l_class_number(d: int, h: int, p) -> LValue:
    """``h log(E) / sqrt(d)`` with E the norm-one fundamental unit."""
    if d <= 1 or d % 4 != 1 or not is_squarefree(d):
        raise DomainError(f"class number route needs squarefree d = 1 mod 4, got {d}")
    if h < 1:
        raise DomainError("class number must be positive")
    p = as_precision(p)
    wp = p.guarded()
    unit = fundamental_unit(d)
    v = h * kernel_log(unit.E.to_real(wp)) / kernel_sqrt(real(d, wp))
    return LValue(d, v.with_precision(p), "class_number", f"E={unit.E}, h={h}")


def _sine_products(d: int, wp):
    chi = character_table(d)
    pi = kernel_pi(wp)
    plus = real(1, wp)
    minus = real(1, wp)
    for k in range(1, chi.m):
        c = chi(k)
        if c == 1:
            plus *= kernel_sin(pi * k / chi.m)
        elif c == -1:
            minus *= kernel_sin(pi * k / chi.m)
    return chi, plus, minus


def l_trig_product(d: int, p) -> LValue:
    """``(1/sqrt m) |log(prod_{chi=1} sin(k pi/m) / prod_{chi=-1} sin(k pi/m))|``.

    The sign is the one giving a positive value, as L_d(1) > 0 for real
    characters.
    """
    if d <= 0:
        raise DomainError("this route needs d > 0")
    p = as_precision(p)
    wp = p.guarded()
    chi, plus, minus = _sine_products(d, wp)
    v = abs(kernel_log(plus / minus)) / kernel_sqrt(real(chi.m, wp))
    return LValue(d, v.with_precision(p), "trig_product", f"m={chi.m}")


def sine_quotient_29(p) -> PrecisionReal:
    """Half-range quotient: squared sines at non-residues over residues mod 29, k <= 14."""
    p = as_precision(p)
    wp = p.guarded()
    pi = kernel_pi(wp)
    num = real(1, wp)
    den = real(1, wp)
    for k in (2, 3, 8, 10, 11, 12, 14):
        num *= kernel_sin(pi * k / 29) ** 2
    for k in (1, 4, 5, 6, 7, 9, 13):
        den *= kernel_sin(pi * k / 29) ** 2
    return (num / den).with_precision(p)


def sine_quotient_29_reduced(p) -> PrecisionReal:
    """The reduced quotient in sines of multiples of pi/58."""
    p = as_precision(p)
    wp = p.guarded()
    pi = kernel_pi(wp)
    s = lambda j: kernel_sin(pi * j / 58) ** 2
    den = real(2 ** 10, wp)
    for j in (1, 5, 7, 8, 9, 12, 13):
        den *= s(j)
    return (s(4) * s(6) / den).with_precision(p)


def l_partial_sum(d: int, nterms: int = 10 ** 6) -> LValue:
    """Dirichlet series summed over whole periods of the character.

    Within each period the character values sum to zero, so stopping at a
    period boundary leaves a tail of order ``1/nterms`` (odd characters) or
    ``1/nterms^2`` (even ones).
    """
    chi = character_table(d)
    blocks = max(nterms // chi.m, 1)
    n = np.arange(1, blocks * chi.m + 1, dtype=np.float64)
    vals = np.tile(np.array(chi.values, dtype=np.float64), blocks)
    per_block = (vals / n).reshape(blocks, chi.m).sum(axis=1)
    total = math.fsum(per_block[::-1])  # smallest blocks first
    return LValue(d, real(total, 15), "partial_sum", f"{blocks} blocks of {chi.m}")
