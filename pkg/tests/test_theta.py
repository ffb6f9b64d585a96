from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import close, oracle
from ramanujan58.elliptic import ell_K
from ramanujan58.numeric_kernel import DomainError, kernel_exp, kernel_pi, real
from ramanujan58.theta import (
    K_from_q,
    Nome,
    jacobi_quartic_residual,
    k_from_q,
    nome_from_k,
    theta2,
    theta3,
    theta4,
    truncation_index,
)

# mpmath.jtheta / qfrom at 50 digits
THETA3_E_MINUS_PI = "1.0864348112133080145753161215102234570702057072452"
THETA2_TENTH = "1.1359306015682802057575894149162932068661638496633"
THETA4_TENTH = "0.8001999980000001999999998000000000019999999999998"
NOME_K_TENTH = "0.00062814566038301559152942556955362642334550304727064"

_q = st.fractions(min_value=Fraction(1, 10 ** 4), max_value=Fraction(9, 10), max_denominator=10 ** 4)


def test_theta3_at_e_minus_pi():
    q = kernel_exp(-kernel_pi(50))
    assert close(theta3(q, 40), THETA3_E_MINUS_PI, "1e-40")


def test_theta2_theta4_at_one_tenth():
    assert close(theta2(Fraction(1, 10), 40), THETA2_TENTH, "1e-40")
    assert close(theta4(Fraction(1, 10), 40), THETA4_TENTH, "1e-40")


def test_nome_at_k_one_tenth():
    assert close(nome_from_k(Fraction(1, 10), 40).q, NOME_K_TENTH, "1e-43")


def test_nome_outside_range():
    with pytest.raises(DomainError):
        Nome(real(1, 20))
    with pytest.raises(DomainError):
        theta3(Fraction(-1, 2), 20)


def test_zero_nome_limits():
    assert theta3(0, 20) == 1
    assert theta2(0, 20) == 0
    m = k_from_q(0, 20)
    assert m.k == 0 and m.kprime == 1


def test_nome_needs_interior_modulus():
    with pytest.raises(DomainError):
        nome_from_k(0, 20)


def test_truncation_index_grows_with_digits():
    assert truncation_index(0.5, 100) > truncation_index(0.5, 30) > 0
    assert truncation_index(0.0, 30) == 0


@given(_q)
def test_theta_functions_match_mpmath(q):
    ctx = oracle(60)
    qq = ctx.mpf(q.numerator) / q.denominator
    for f, n in ((theta2, 2), (theta3, 3), (theta4, 4)):
        assert close(f(q, 40), ctx.nstr(ctx.jtheta(n, 0, qq), 55), "1e-38")


@given(_q)
def test_jacobi_quartic(q):
    assert abs(jacobi_quartic_residual(q, 30)) < Fraction(1, 10 ** 25)


@given(st.fractions(min_value=Fraction(1, 100), max_value=Fraction(99, 100), max_denominator=100))
def test_nome_roundtrip(k):
    q = nome_from_k(k, 40)
    assert k_from_q(q, 35).k.isclose(real(k, 35), Fraction(1, 10 ** 30))


@given(st.fractions(min_value=Fraction(1, 100), max_value=Fraction(99, 100), max_denominator=100))
def test_K_from_theta3_matches_agm(k):
    q = nome_from_k(k, 40)
    assert K_from_q(q, 35).isclose(ell_K(k, 35), Fraction(1, 10 ** 30))


@given(_q)
def test_modulus_pair_is_on_the_unit_circle(q):
    m = k_from_q(q, 30)
    assert (m.k * m.k + m.kprime * m.kprime).isclose(1, Fraction(1, 10 ** 25))
