import itertools
import warnings

import pytest

from rtforest import (
    LAMBDA,
    Alphabets,
    ONE,
    DecorationError,
    Forest,
    GroupLikeUncheckedWarning,
    LinComb,
    MorphismError,
    OperatedTarget,
    Tree,
    bplus,
    check_bialgebra_morphism,
    concat,
    enumerate_forests,
    forest_target,
    forests_up_to,
    graft,
    mul,
    relabel_assignment,
    universal_morphism,
)
from rtforest.lambda_ring import poly_mul
from rtforest.operated import bialgebra_morphism_defects


def _identity(alphabets):
    return universal_morphism(relabel_assignment({}, alphabets), forest_target(alphabets.Omega), alphabets)


def _swap(alphabets):
    sigma = {"x": "y", "y": "x"}
    return universal_morphism(relabel_assignment(sigma, alphabets), forest_target(alphabets.Omega), alphabets)


def _relabel(f, sigma):
    """Direct structural relabeling, independent of the morphism machinery."""
    return Forest(
        Tree(sigma.get(t.label, t.label)) if t.children is None else Tree(t.label, _relabel(t.children, sigma))
        for t in f.trees
    )


def test_identity_morphism(alphabets):
    fbar = _identity(alphabets)
    for f in forests_up_to(4, alphabets):
        assert fbar(f) == LinComb.of(f)


def test_relabeling_example(alphabets, F):
    fbar = _swap(alphabets)
    assert fbar(F("a[x] x")) == LinComb.of(F("a[y] y"))
    for f in forests_up_to(4, alphabets):
        assert fbar(f) == LinComb.of(_relabel(f, {"x": "y", "y": "x"}))


def test_relabeling_into_a_new_name(alphabets):
    fbar = universal_morphism(
        relabel_assignment({"x": "z"}, alphabets), forest_target(alphabets.Omega), alphabets
    )
    f = Forest((Tree("a", Forest((Tree("x"), Tree("y")))),))
    assert fbar(f) == LinComb.of(Forest((Tree("a", Forest((Tree("z"), Tree("y")))),)))


def test_operator_compatibility(alphabets):
    fbar = _swap(alphabets)
    target = fbar.target
    for g in forests_up_to(3, alphabets):
        for w in alphabets.Omega:
            assert fbar(graft(w, g)) == target.ops[w](fbar(g))


def test_multiplicative_and_extends_generators(alphabets):
    fbar = _swap(alphabets)
    for n in range(5):
        for g, h in itertools.product(forests_up_to(n, alphabets), enumerate_forests(4 - n, alphabets)):
            assert fbar(concat(g, h)) == mul(fbar(g), fbar(h))
    for x in alphabets.X:
        assert fbar(Tree(x)) == fbar.assignment[x]


def test_linear_extension(alphabets, L):
    fbar = _swap(alphabets)
    assert fbar(L("2·x - λ·a[y]")) == 2 * LinComb.of(Tree("y")) - LAMBDA * bplus("a", Tree("x"))


def test_bialgebra_morphisms(alphabets):
    basis = forests_up_to(4, alphabets)
    assert check_bialgebra_morphism(_identity(alphabets), basis)
    assert check_bialgebra_morphism(_swap(alphabets), basis)


def test_broken_target_is_detected(alphabets, broken_target):
    fbar = universal_morphism(relabel_assignment({}, alphabets), broken_target(alphabets.Omega), alphabets)
    basis = forests_up_to(4, alphabets)
    assert not check_bialgebra_morphism(fbar, basis)
    first = next(iter(bialgebra_morphism_defects(fbar, basis)))
    assert str(first) == "a[b]"


def test_uniqueness_on_generators_and_operators(alphabets):
    """Two morphisms built independently agree wherever they are defined."""
    a = _swap(alphabets)
    b = _swap(alphabets)
    for f in reversed(forests_up_to(4, alphabets)):
        assert a(f) == b(f)


def test_scalar_target_counts_operator_vertices(alphabets):
    target = OperatedTarget(unit=ONE, mul=poly_mul, ops={w: (lambda p: LAMBDA * p) for w in alphabets.Omega})
    with pytest.warns(GroupLikeUncheckedWarning):
        fbar = universal_morphism({x: ONE for x in alphabets.X}, target, alphabets)
    for f in forests_up_to(4, alphabets):
        omega_vertices = str(f).count("a") + str(f).count("b")
        assert fbar(f) == LAMBDA**omega_vertices


def test_group_like_check_can_be_skipped(alphabets):
    target = OperatedTarget(unit=ONE, mul=poly_mul, ops={w: (lambda p: p) for w in alphabets.Omega})
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        universal_morphism({x: ONE for x in alphabets.X}, target, alphabets, check_group_like=False)


def test_errors(alphabets):
    target = forest_target(alphabets.Omega)
    with pytest.raises(MorphismError):
        universal_morphism({"x": LinComb.of(Tree("x"))}, target, alphabets)
    with pytest.raises(MorphismError):
        universal_morphism(relabel_assignment({}, alphabets), forest_target(["a"]), alphabets)
    not_group_like = relabel_assignment({}, alphabets)
    not_group_like["x"] = LinComb.of(Tree("x")) + LinComb.of(Tree("y"))
    with pytest.raises(MorphismError):
        universal_morphism(not_group_like, target, alphabets)
    with pytest.raises(DecorationError):
        relabel_assignment({"x": "a"}, alphabets)
    with pytest.raises(DecorationError):
        relabel_assignment({"q": "x"}, alphabets)


def test_target_spot_check(alphabets, F):
    target = forest_target(alphabets.Omega)
    target.spot_check([LinComb.of(F("x")), LinComb.of(F("a[y]")), target.unit])
    bad = OperatedTarget(unit=ONE, mul=lambda p, q: p - q, ops={})
    with pytest.raises(MorphismError):
        bad.spot_check([LAMBDA, ONE])


def test_no_generators_needs_no_group_like_check():
    A = Alphabets((), ("a",))
    target = OperatedTarget(unit=ONE, mul=poly_mul, ops={"a": lambda p: LAMBDA * p})
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        fbar = universal_morphism({}, target, A)
    assert fbar(Forest((Tree("a", Forest((Tree("a", Forest()),))),))) == LAMBDA**2
