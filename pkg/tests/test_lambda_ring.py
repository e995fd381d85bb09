from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rtforest import LAMBDA, ONE, ZERO, LambdaPoly
from rtforest.lambda_ring import poly_add, poly_eval, poly_mul

polys = st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=5).map(LambdaPoly)
rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)


def test_addition_examples():
    assert poly_add(LAMBDA, -LAMBDA) == ZERO
    assert poly_add(LAMBDA + 1, LAMBDA - 1) == 2 * LAMBDA
    assert poly_add(0, LAMBDA**2) == LAMBDA**2


def test_multiplication_examples():
    assert poly_mul(LAMBDA + 1, LAMBDA - 1) == LAMBDA**2 - 1
    assert poly_mul(0, LAMBDA**3 + 4) == ZERO
    assert poly_mul(-1, -LAMBDA) == LAMBDA


def test_evaluation_examples():
    assert poly_eval(LAMBDA**2 - 1, 2) == 3
    assert poly_eval(3 * LAMBDA**2 + 7, 0) == 7
    assert poly_eval(-LAMBDA, -1) == 1
    assert (LAMBDA + 1).evaluate(Fraction(1, 2)) == Fraction(3, 2)


def test_zero_terms_are_pruned():
    p = LambdaPoly({0: 0, 2: 3, 5: 0})
    assert p.coeffs == {2: 3}
    assert (LAMBDA - LAMBDA).is_zero
    assert ZERO.degree == -1


def test_constants_compare_with_ints():
    assert ONE == 1 and ZERO == 0
    assert hash(LambdaPoly({0: 5})) == hash(5)
    assert LAMBDA != 1


@pytest.mark.parametrize(
    "p, text",
    [
        (LAMBDA**2 - 1, "λ^2 - 1"),
        (-LAMBDA, "-λ"),
        (2 * LAMBDA**3, "2λ^3"),
        (ZERO, "0"),
        (-3 * LAMBDA + 1, "-3λ + 1"),
    ],
)
def test_text_form(p, text):
    assert p.to_text() == text
    assert LambdaPoly.parse(text) == p


def test_ascii_text_form():
    assert (LAMBDA**2 - LAMBDA).to_text("lambda") == "lambda^2 - lambda"
    assert LambdaPoly.parse("lambda^2 - lambda") == LAMBDA**2 - LAMBDA


def test_json_form():
    p = 2 * LAMBDA**3 - 1
    assert p.to_json() == [[3, "2"], [0, "-1"]]
    assert LambdaPoly.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        LambdaPoly.from_json([[-1, "2"]])


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(polys, polys, rationals)
def test_evaluation_is_a_ring_map(p, q, v):
    assert poly_eval(p * q, v) == poly_eval(p, v) * poly_eval(q, v)
    assert poly_eval(p + q, v) == poly_eval(p, v) + poly_eval(q, v)


@given(polys)
def test_text_and_json_round_trip(p):
    assert LambdaPoly.parse(p.to_text()) == p
    assert LambdaPoly.from_json(p.to_json()) == p
