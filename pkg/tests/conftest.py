import pytest

from rtforest import Alphabets, SessionConfig, bplus, forest_target, mul, parse_forest, parse_lincomb, unit


@pytest.fixture
def alphabets():
    return Alphabets(("x", "y"), ("a", "b"))


@pytest.fixture
def wide():
    """Three names on each side, enough for every worked coproduct example."""
    return Alphabets(("x", "y", "z"), ("a", "b", "c"))


@pytest.fixture
def F(wide):
    return lambda text: parse_forest(text, wide)


@pytest.fixture
def L(wide):
    return lambda text: parse_lincomb(text, wide)


@pytest.fixture
def cfg(wide):
    return SessionConfig(wide)


def left_multiplication_target(operators):
    """Forest algebra whose operators multiply by a single vertex on the left.

    These operators are not weight -λ cocycles, so morphisms into this
    target with the forest coproduct must fail the coproduct check.
    """
    target = forest_target(operators, name="broken")
    target.ops = {w: (lambda v, w=w: mul(bplus(w, unit()), v)) for w in operators}
    return target


@pytest.fixture
def broken_target():
    return left_multiplication_target

