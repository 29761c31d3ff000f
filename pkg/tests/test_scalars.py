from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from g2fmethod.scalars import (
    LAMBDA,
    LambdaPoly,
    parse_lambda_poly,
    poly_gcd,
    rational_from_string,
    rational_to_string,
)


def test_constants_embed_losslessly():
    p = LambdaPoly.const(Fraction(3, 7))
    assert p.is_constant()
    assert p.constant_value() == Fraction(3, 7)
    assert p == Fraction(3, 7)


def test_leading_coefficient_nonzero_normal_form():
    p = LambdaPoly([1, 2, 0, 0])
    assert p.degree == 1
    assert p.leading() == 2
    assert LambdaPoly([0, 0]).is_zero()


def test_arithmetic():
    p = 2 * LAMBDA + 5
    q = LAMBDA - Fraction(1, 2)
    assert (p * q).coeffs == (Fraction(-5, 2), 4, 2)
    assert (p - p).is_zero()
    assert (LAMBDA ** 3).degree == 3


def test_divmod_exact():
    p = (LAMBDA + 2) * (3 * LAMBDA - 1)
    q, r = p.divmod(LAMBDA + 2)
    assert r.is_zero()
    assert q == 3 * LAMBDA - 1
    assert p.exact_div(LAMBDA + 2) == q
    with pytest.raises(ArithmeticError):
        (p + 1).exact_div(LAMBDA + 2)


def test_evaluation_horner():
    p = LAMBDA ** 2 - Fraction(1, 4)
    assert p(Fraction(1, 2)) == 0
    assert p(2) == Fraction(15, 4)


def test_rational_roots_linear():
    assert (2 * LAMBDA + 5).rational_roots() == [Fraction(-5, 2)]


def test_rational_roots_quadratic():
    p = LAMBDA ** 2 - Fraction(1, 4)
    assert p.rational_roots() == [Fraction(-1, 2), Fraction(1, 2)]


def test_rational_roots_shifted_family():
    # -5 + 2N - 2*lam at N = 1 vanishes at -3/2
    p = -3 - 2 * LAMBDA
    assert p.rational_roots() == [Fraction(-3, 2)]


def test_rational_roots_rejects_zero():
    with pytest.raises(ValueError):
        LambdaPoly().rational_roots()


def test_rational_roots_with_zero_root():
    p = LAMBDA * (LAMBDA - 3)
    assert p.rational_roots() == [0, 3]
    assert p.deflate_rational_roots().is_constant()


def test_gcd_monic():
    a = (LAMBDA - 1) * (LAMBDA + 2) * 4
    b = (LAMBDA - 1) * (LAMBDA - 5) * 6
    assert poly_gcd(a, b) == LAMBDA - 1


def test_string_forms():
    assert str(2 * LAMBDA + 5) == "2*L + 5"
    assert str(LAMBDA ** 2 - Fraction(1, 2)) == "L^2 - 1/2"
    assert str(LambdaPoly()) == "0"
    assert str(-LAMBDA) == "-L"


@given(
    st.lists(st.fractions(max_denominator=20), min_size=0, max_size=5),
)
@settings(max_examples=60, derandomize=True)
def test_parse_roundtrip(coeffs):
    p = LambdaPoly(coeffs)
    assert parse_lambda_poly(str(p)) == p


def test_rational_strings():
    assert rational_from_string("-3/2") == Fraction(-3, 2)
    assert rational_to_string(Fraction(8, 4)) == "2"
    with pytest.raises(ValueError):
        rational_from_string("1.5")
