import itertools

import pytest

from rtforest import (
    EMPTY,
    Alphabets,
    DecorationError,
    Forest,
    Tree,
    breadth,
    concat,
    count_forests,
    depth,
    enumerate_forests,
    forests_up_to,
    graft,
    is_valid,
    leaf,
    render,
    validate,
    vertex_count,
)


def test_leaf(wide):
    assert leaf("x", wide) == Tree("x")
    assert leaf("a", wide) == Tree("a", EMPTY)
    assert leaf("a", wide).children == EMPTY
    with pytest.raises(DecorationError):
        leaf("w", wide)


def test_graft(wide):
    assert graft("a", EMPTY, wide) == leaf("a", wide)
    t = graft("a", concat(leaf("x", wide), leaf("y", wide)), wide)
    assert render(Forest((t,))) == "a[x y]"
    with pytest.raises(DecorationError):
        graft("x", leaf("y", wide), wide)
    with pytest.raises(DecorationError):
        graft("w", EMPTY, wide)


def test_concat(F):
    assert concat(EMPTY, F("a[y] x")) == F("a[y] x")
    assert concat(F("a[y] x"), EMPTY) == F("a[y] x")
    assert render(concat(F("x"), F("a[y]"))) == "x a[y]"
    assert render(concat(F("x y"), F("z"))) == "x y z"
    assert concat(F("x"), F("y")) != concat(F("y"), F("x"))


def test_forest_sequence_behaviour(F):
    f = F("x a[y] b")
    assert len(f) == f.breadth == 3
    assert f[1] == F("a[y]")[0]
    assert f[1:] == F("a[y] b")
    assert f * F("z") == F("x a[y] b z")
    assert str(EMPTY) == "()"


def test_breadth(F):
    assert breadth(EMPTY) == 0
    assert breadth(F("x a[y]")) == 2
    assert breadth(F("a[x y z]")) == 1


def test_depth(F):
    assert depth(F("x a[y]")) == 1
    assert depth(F("a[c x]")) == 2
    assert depth(EMPTY) == 0
    assert depth(F("x")) == 0
    assert depth(F("a")) == 1


def test_vertex_count(F):
    assert vertex_count(EMPTY) == 0
    assert vertex_count(F("a[x y]")) == 3
    assert vertex_count(F("x b[a]")) == 3


def test_alphabets_validation():
    with pytest.raises(DecorationError):
        Alphabets(("x",), ("x",))
    with pytest.raises(DecorationError):
        Alphabets(("x", "x"), ())
    with pytest.raises(DecorationError):
        Alphabets(("λ",), ())
    with pytest.raises(DecorationError):
        Alphabets(("1x",), ())
    with pytest.raises(DecorationError):
        Alphabets(("x-y",), ())
    assert Alphabets(("x_1", "é"), ("ω",)).Omega == ("ω",)


def test_validate_rejects_misplaced_names(wide):
    assert not is_valid(Forest((Tree("a"),)), wide)
    assert not is_valid(Forest((Tree("x", EMPTY),)), wide)
    assert not is_valid(Forest((Tree("w"),)), wide)
    with pytest.raises(DecorationError):
        validate(Tree("x", Forest((Tree("y"),))), wide)


def test_enumeration_small_cases():
    A = Alphabets(("x",), ("a",))
    assert [render(f) for f in enumerate_forests(1, A)] == ["a", "x"]
    assert sorted(render(f) for f in enumerate_forests(2, A)) == sorted(
        ["x x", "x a", "a x", "a a", "a[x]", "a[a]"]
    )
    assert len(enumerate_forests(3, Alphabets((), ("a",)))) == 5
    assert enumerate_forests(0, A) == [EMPTY]


@pytest.mark.parametrize("nx, nw", [(0, 1), (1, 1), (2, 2), (1, 3), (3, 0)])
def test_enumeration_matches_counting_oracle(nx, nw):
    A = Alphabets(tuple(f"x{i}" for i in range(nx)), tuple(f"w{i}" for i in range(nw)))
    for n in range(6):
        forests = enumerate_forests(n, A)
        assert len(forests) == count_forests(n, nx, nw)
        assert len(set(forests)) == len(forests)
        assert all(vertex_count(f) == n and is_valid(f, A) for f in forests)


def test_catalan_counts_for_one_operator():
    catalan = [1, 1, 2, 5, 14, 42, 132, 429]
    assert [count_forests(n, 0, 1) for n in range(8)] == catalan


def test_enumeration_order_is_canonical(alphabets):
    forests = enumerate_forests(3, alphabets)
    assert [render(f) for f in forests] == sorted(render(f) for f in forests)


def test_statistics_under_graft_and_concat(alphabets):
    small = forests_up_to(3, alphabets)
    for f in small:
        for w in alphabets.Omega:
            g = graft(w, f, alphabets)
            assert depth(g) == depth(f) + 1
            assert is_valid(Forest((g,)), alphabets)
    for f, g in itertools.product(forests_up_to(2, alphabets), repeat=2):
        h = concat(f, g)
        assert depth(h) == max(depth(f), depth(g))
        assert breadth(h) == breadth(f) + breadth(g)
        assert is_valid(h, alphabets)


def test_hash_and_equality_are_structural(F):
    assert F("a[x y]") == F("a[x y]")
    assert hash(F("a[x y]")) == hash(F("a[x y]"))
    assert F("a[x y]") != F("a[y x]")
    assert len({F("a"), F("a[]"), F("a")}) == 1
