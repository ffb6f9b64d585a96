from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import close
from ramanujan58.invariants import context, sato_coefficients
from ramanujan58.numeric_kernel import DomainError, kernel_pi, pi_digits, pi_oracle
from ramanujan58.pi_engine import (
    LiteralRamanujanTerm,
    digits_per_term,
    inverse_pi_error,
    naive_partial_sum,
    pi_ramanujan,
    pi_ramanujan_string,
    prefactor_scaling_holds,
    printed_form_terms,
    sanity_series,
    sato_series_sum,
    split_sum,
    terms_for_digits,
    termwise_equivalence,
)

# mpmath: 2 sqrt2 * 1103 / 9801 and 1/pi minus it; log10(396^4/256)
TERM0 = "0.31830987844047012321768445317891990218597042720963"
TERM0_GAP = "0.0000000077433205483200830735661088218829488642712866"
DIGITS_PER_TERM = "7.9825407783901996613610231110130194404278396753914"


def test_first_literal_term():
    assert close(LiteralRamanujanTerm(0).scaled(40), TERM0, "1e-40")
    gap = 1 / pi_oracle(50) - LiteralRamanujanTerm(0).scaled(50)
    assert close(gap, TERM0_GAP, "1e-50")


def test_literal_term_parts():
    t = LiteralRamanujanTerm(1)
    assert t.numerator == 27493 * 24
    assert t.denominator == 396 ** 4
    with pytest.raises(DomainError):
        LiteralRamanujanTerm(-1)


def test_literal_terms_decrease_with_limiting_ratio():
    values = [LiteralRamanujanTerm(n).value for n in range(40)]
    assert all(b < a for a, b in zip(values, values[1:]))
    # the ratio approaches 256/396^4 like 1 - 3/(2n)
    limit = 256 / 396 ** 4
    assert abs(float(values[39] / values[38]) / limit - 1) < 0.05


def test_prefactor_scaling():
    assert prefactor_scaling_holds(10)


def test_termwise_ratios_are_one():
    rows = termwise_equivalence(10, 30)
    assert [r.n for r in rows] == list(range(11))
    assert all(abs(r.ratio - 1) < Fraction(1, 10 ** 25) for r in rows)


def test_termwise_needs_at_least_three_terms():
    with pytest.raises(DomainError):
        termwise_equivalence(2, 30)


@pytest.mark.parametrize("n", [1, 2, 7, 20, 21])
def test_binary_splitting_is_exact(n):
    T, Q = split_sum(n)
    assert Fraction(T, Q) == naive_partial_sum(n)


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=2, max_value=6))
def test_binary_splitting_independent_of_workers(n, workers):
    assert split_sum(n) == split_sum(n, workers=workers)


@pytest.mark.parametrize("digits", [10, 100, 1000, 10000])
def test_oracle_equivalence(digits):
    assert pi_ramanujan_string(digits) == pi_digits(digits, "oracle")


def test_fifteen_digits():
    assert pi_ramanujan_string(15) == "3.14159265358979"
    assert pi_ramanujan(40).isclose(kernel_pi(40))


def test_term_count_for_1000_digits():
    assert terms_for_digits(1000) <= 128


def test_digits_out_of_range():
    for bad in (0, -1, 10 ** 5 + 1):
        with pytest.raises(DomainError):
            pi_ramanujan(bad)


def test_digits_per_term():
    rep = digits_per_term()
    assert close(rep.analytic, DIGITS_PER_TERM, "1e-45")
    assert all(10 ** -8.5 <= r <= 10 ** -7.5 for r in rep.error_ratios)
    assert abs(rep.error_ratios[-1] - 256 / 396 ** 4) < 1e-9


def test_partial_sums_increase_toward_one_over_pi():
    errs = [inverse_pi_error(n, 30) for n in range(1, 8)]
    assert all(e.sign() < 0 for e in errs)
    assert all(abs(b) < abs(a) for a, b in zip(errs, errs[1:]))


def test_sanity_series():
    rep = sanity_series()
    assert abs(rep.basel_raw - rep.basel_target) > 5e-5
    assert abs(rep.basel_corrected - rep.basel_target) < 1e-8
    assert abs(rep.leibniz_averaged - rep.leibniz_target) < 1e-8


def test_general_series_at_level_10():
    params = sato_coefficients(context(10, 40), 40)
    assert sato_series_sum(params, 40, 30).isclose(1 / kernel_pi(30), Fraction(1, 10 ** 25))


def test_general_series_at_level_4():
    params = sato_coefficients(context(4, 40), 40)
    assert sato_series_sum(params, 200, 30).isclose(1 / kernel_pi(30), Fraction(1, 10 ** 25))


def test_printed_form_differs_from_n_equal_one():
    rows = printed_form_terms(3, 25)
    assert rows[0].printed.isclose(rows[0].corrected)
    assert all(abs(float(r.printed / r.corrected) - 1) > 0.4 for r in rows[1:])
