import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtforest import (
    EMPTY,
    LAMBDA,
    Alphabets,
    LambdaPoly,
    LinComb,
    ParseError,
    SessionConfig,
    Tensor2,
    Tree,
    concat,
    coproduct,
    forests_up_to,
    graft,
    leaf,
    parse_forest,
    parse_lincomb,
    parse_tensor,
    serialize_lincomb,
    serialize_tensor,
)
from rtforest.linear import tensor3_of, tensor_of
from rtforest.text import (
    lincomb_from_json,
    lincomb_to_json,
    serialize_forest,
    serialize_specialized,
    specialized_to_json,
    tensor_from_json,
    tensor_to_json,
)

A = Alphabets(("x", "y"), ("a", "b"))
BASIS = forests_up_to(3, A)
coeffs = st.dictionaries(st.integers(0, 3), st.integers(-5, 5), max_size=3).map(LambdaPoly)
lincombs = st.lists(st.tuples(st.sampled_from(BASIS), coeffs), max_size=5).map(LinComb)
tensors = st.lists(st.tuples(st.tuples(st.sampled_from(BASIS), st.sampled_from(BASIS)), coeffs), max_size=5).map(Tensor2)


def test_parse_examples(wide):
    t = parse_forest("a[x y]", wide)
    assert t == concat(graft("a", parse_forest("x y", wide)))
    assert t[0].label == "a" and [c.label for c in t[0].children] == ["x", "y"]
    assert parse_forest("()", wide) == EMPTY
    assert parse_forest("a[]", wide) == parse_forest("a", wide)
    assert parse_forest("  x   a[ y ]  ", wide) == parse_forest("x a[y]", wide)


@pytest.mark.parametrize(
    "text, rule, offset",
    [
        ("x[y]", "generator-internal", 0),
        ("x[]", "generator-internal", 0),
        ("a[x", "unbalanced-brackets", 1),
        ("a]", "unbalanced-brackets", 1),
        ("q", "undeclared-name", 0),
        ("x q", "undeclared-name", 2),
        ("", "forest", 0),
        ("λ", "name", 0),
    ],
)
def test_parse_errors(text, rule, offset):
    with pytest.raises(ParseError) as info:
        parse_forest(text, A)
    assert info.value.rule == rule
    assert info.value.offset == offset
    assert f"at byte {offset}" in str(info.value)


def test_error_offsets_are_in_bytes():
    U = Alphabets(("é",), ("ω",))
    with pytest.raises(ParseError) as info:
        parse_forest("ω[é] q", U)
    assert info.value.position == 5
    assert info.value.offset == 7


def test_serialize_examples(wide):
    assert serialize_forest(graft("a", parse_forest("x y", wide))) == "a[x y]"
    assert serialize_forest(leaf("a", wide)) == "a"
    assert serialize_forest(EMPTY) == "()"


def test_tensor_serialization(F, cfg):
    assert serialize_tensor(-LAMBDA * tensor_of(EMPTY, EMPTY), cfg) == "-λ·(() ⊗ ())"
    assert serialize_tensor(coproduct(F("a[x]")), cfg) == "-λ·(a[x] ⊗ ()) + 1·(x ⊗ a[x])"
    assert serialize_tensor(Tensor2(), cfg) == "0"


def test_ascii_mode(F, wide):
    cfg = SessionConfig(wide, "ascii")
    text = serialize_tensor(coproduct(F("a[x]")), cfg)
    assert text == "-lambda*(a[x] (x) ()) + 1*(x (x) a[x])"
    assert parse_tensor(text, cfg) == coproduct(F("a[x]"))
    with pytest.raises(ValueError):
        SessionConfig(wide, "latex")


def test_polynomial_coefficients(L, cfg):
    v = L("(λ^2 - 1)·x - 3λ·a[y] + (-λ + 2)·()")
    assert v.coefficient(parse_forest("x", cfg.alphabets)) == LAMBDA**2 - 1
    assert serialize_lincomb(v, cfg) == "-(λ - 2)·(()) + (λ^2 - 1)·(x) - 3λ·(a[y])"
    assert L(serialize_lincomb(v, cfg)) == v


def test_lincomb_sugar(L, F):
    assert L("x + x") == 2 * LinComb.of(F("x"))
    assert L("lambda*x - λ·x") == 0
    assert L("0") == 0
    assert L("-(a x)") == -LinComb.of(F("a x"))


def test_tensor_arities(cfg, F):
    t3 = parse_tensor("λ·(x ⊗ () ⊗ a)", cfg, arity=3)
    assert t3 == LAMBDA * tensor3_of(F("x"), EMPTY, F("a"))
    assert parse_tensor(serialize_tensor(t3, cfg), cfg, arity=3) == t3
    with pytest.raises(ParseError):
        parse_tensor("(x ⊗ y ⊗ x)", cfg)


def test_malformed_coefficients(cfg):
    for text in ["2·", "(λ +)·x", "x +", "3*(x ⊗ y)", "(x ⊗ y) + z"]:
        with pytest.raises(ParseError):
            parse_lincomb(text, cfg)


def test_round_trip_on_enumerated_forests():
    cfg = SessionConfig(A)
    for f in forests_up_to(5, A):
        text = serialize_forest(f, cfg)
        assert parse_forest(text, cfg) == f
        assert serialize_forest(parse_forest(text, cfg), cfg) == text


def test_canonicalization_is_idempotent():
    for text in ["a[]  b[ x  a[] ]", "x   y", "()", "b[a[]]"]:
        once = serialize_forest(parse_forest(text, A))
        assert serialize_forest(parse_forest(once, A)) == once
    assert serialize_forest(parse_forest("b[a[]]", A)) == "b[a]"


@settings(max_examples=100)
@given(lincombs)
def test_lincomb_text_round_trip(v):
    for mode in ("unicode", "ascii"):
        cfg = SessionConfig(A, mode)
        assert parse_lincomb(serialize_lincomb(v, cfg), cfg) == v


@settings(max_examples=100)
@given(tensors)
def test_tensor_text_round_trip(t):
    cfg = SessionConfig(A)
    assert parse_tensor(serialize_tensor(t, cfg), cfg) == t


@settings(max_examples=100)
@given(lincombs, tensors)
def test_json_round_trip(v, t):
    assert lincomb_from_json(json.loads(json.dumps(lincomb_to_json(v))), A) == v
    assert tensor_from_json(json.loads(json.dumps(tensor_to_json(t))), A) == t


def test_json_schema(F, wide):
    t = coproduct(F("a[x]"))
    assert tensor_to_json(t) == [
        {"forests": ["a[x]", "()"], "coeff": [[1, "-1"]]},
        {"forests": ["x", "a[x]"], "coeff": [[0, "1"]]},
    ]
    assert lincomb_to_json(LinComb.of(F("x"), 2 * LAMBDA)) == [{"forest": "x", "coeff": [[1, "2"]]}]
    with pytest.raises(ValueError):
        lincomb_from_json([{"forest": "x[y]", "coeff": [[0, "1"]]}], wide)


def test_specialized_output(F, cfg):
    t = coproduct(F("a[x]"))
    assert serialize_specialized(t, Fraction(1, 2), cfg) == "-1/2·(a[x] ⊗ ()) + 1·(x ⊗ a[x])"
    assert specialized_to_json(t, -1) == [
        {"forests": ["a[x]", "()"], "coeff": "1"},
        {"forests": ["x", "a[x]"], "coeff": "1"},
    ]
    assert serialize_specialized(coproduct(F("()")), 0, cfg) == "0"


def test_parser_never_returns_invalid_forests():
    for text in ["x[a]", "a[x[y]]", "b[a x[]]"]:
        with pytest.raises(ParseError):
            parse_forest(text, A)
    assert parse_forest("b[a[x] y]", A)[0] == Tree("b", parse_forest("a[x] y", A))
