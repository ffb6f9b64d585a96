from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import close, oracle
from ramanujan58.numeric_kernel import (
    DomainError,
    Precision,
    PrecisionReal,
    int_to_decimal,
    kernel_atan,
    kernel_exp,
    kernel_log,
    kernel_pi,
    kernel_root,
    kernel_sqrt,
    leibniz_partial,
    pi_digits,
    pi_oracle,
    pi_oracle_alt,
    real,
)

# mpmath.mp.pi at 110 digits
PI_100 = ("3.14159265358979323846264338327950288419716939937510"
          "58209749445923078164062862089986280348253421170679")


def test_precision_rejects_non_positive():
    with pytest.raises(DomainError):
        Precision(0)
    with pytest.raises(DomainError):
        Precision(-3)


def test_precision_tolerance_and_guard():
    p = Precision(30)
    assert p.tolerance == Fraction(1, 10 ** 30)
    assert p.guarded().digits == 40
    assert p.bits() > p.bits(guard=0)


def test_pi_oracle_matches_reference_digits():
    assert close(pi_oracle(100), PI_100, "1e-100")


def test_machin_and_gauss_agree_at_500_digits():
    assert pi_oracle(500).isclose(pi_oracle_alt(500), Fraction(1, 10 ** 500))


@pytest.mark.parametrize("digits,expected", [
    (1, "3.1"),
    (5, "3.1415"),
    (15, "3.14159265358979"),
    (30, "3.14159265358979323846264338327"),
])
def test_pi_digits_truncates(digits, expected):
    assert pi_digits(digits) == expected


def test_pi_digits_unknown_method():
    with pytest.raises(DomainError):
        pi_digits(10, "bbp")


def test_mixed_precision_takes_the_smaller():
    a = real(Fraction(1, 3), 50)
    b = real(Fraction(1, 7), 20)
    assert (a + b).digits == 20
    assert (a * 3).digits == 50


def test_exact_operands_adopt_precision():
    x = real(2, 40)
    assert (x + Fraction(1, 3)).isclose(real(Fraction(7, 3), 40))


def test_sqrt_of_negative_is_domain_error():
    with pytest.raises(DomainError):
        kernel_sqrt(real(-1, 20))


def test_log_of_non_positive_is_domain_error():
    with pytest.raises(DomainError):
        kernel_log(real(0, 20))


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        real(1, 20) / real(0, 20)


def test_int_to_decimal_matches_str_for_huge_values():
    import sys
    n = 7 ** 30000  # about 25000 digits
    old = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        expected = str(n)
    finally:
        sys.set_int_max_str_digits(old)
    assert int_to_decimal(n) == expected
    assert int_to_decimal(10 ** 5000) == "1" + "0" * 5000


def test_leibniz_partial_is_slow():
    assert abs(leibniz_partial(1000) - 3.141592653589793) > 1e-4


_fracs = st.fractions(min_value=Fraction(1, 1000), max_value=1000, max_denominator=10 ** 6)


@given(_fracs)
def test_sqrt_squares_back(x):
    r = kernel_sqrt(real(x, 40))
    assert (r * r).isclose(real(x, 40), Fraction(x) * Fraction(1, 10 ** 38))


@given(_fracs)
def test_exp_log_roundtrip(x):
    v = real(x, 40)
    assert kernel_exp(kernel_log(v)).isclose(v, Fraction(x) * Fraction(1, 10 ** 37))


@given(st.fractions(min_value=-50, max_value=50, max_denominator=1000))
def test_exp_matches_oracle(x):
    ctx = oracle(60)
    expected = ctx.exp(ctx.mpf(x.numerator) / x.denominator)
    got = kernel_exp(real(x, 40))
    assert abs(Fraction(got.to_str(45)) / Fraction(ctx.nstr(expected, 55)) - 1) < Fraction(1, 10 ** 38)


@given(st.fractions(min_value=-100, max_value=100, max_denominator=1000))
def test_atan_matches_oracle(x):
    ctx = oracle(60)
    expected = ctx.atan(ctx.mpf(x.numerator) / x.denominator)
    assert close(kernel_atan(real(x, 40)), ctx.nstr(expected, 55), "1e-39")


@given(_fracs, st.integers(min_value=2, max_value=13))
def test_root_is_inverse_of_power(x, n):
    r = kernel_root(real(x, 40), n)
    assert (r ** n).isclose(real(x, 40), Fraction(x) * Fraction(1, 10 ** 37))


@given(st.fractions(max_denominator=10 ** 6, min_value=-10 ** 6, max_value=10 ** 6),
       st.fractions(max_denominator=10 ** 6, min_value=-10 ** 6, max_value=10 ** 6))
def test_comparisons_agree_with_exact_rationals(a, b):
    x, y = real(a, 40), real(b, 40)
    # 40 digits resolve any two distinct rationals with denominators <= 10^6 and size <= 10^6
    assert (x < y) == (a < b)
    assert (x == y) == (a == b)


def test_kernel_pi_precision_tag():
    assert kernel_pi(75).digits == 75
    assert isinstance(kernel_pi(20), PrecisionReal)
