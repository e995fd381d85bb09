"""The weighted coproduct on decorated planar rooted forests.

The coproduct is defined by structural recursion:

* empty forest:      -lambda (() (x) ())
* generator dot x:   x (x) x
* grafted tree:      B(g) (x) (-lambda ()) + (id (x) B) Delta(g)
* T1 T2 ... Tm:      T1 . Delta(T2...Tm) + Delta(T1) . (T2...Tm) + lambda T1 (x) T2...Tm

There is no counit; nothing here assumes one.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .forest import EMPTY, Alphabets, DecorationError, Forest, Tree, as_forest, validate
from .lambda_ring import LAMBDA, LambdaPoly, Scalar
from .linear import (
    LinComb,
    Tensor2,
    Tensor3,
    _accumulate,
    apply_right,
    bplus,
    coapply_left,
    coapply_right,
    dot_left,
    dot_right,
    tensor_of,
)

__all__ = [
    "cocycle_defect",
    "coassoc_defect",
    "coproduct",
    "coproduct_lin",
    "dotword_coproduct_closed",
    "is_group_like",
    "leibniz_defect",
]

_NEG_LAMBDA = -LAMBDA


def coproduct(f: Forest | Tree, alphabets: Alphabets | None = None) -> Tensor2:
    """Weighted coproduct of a basis forest, with the weight kept symbolic."""
    f = as_forest(f)
    if alphabets is not None:
        validate(f, alphabets)
    return _coproduct(f)


@lru_cache(maxsize=200_000)
def _coproduct(f: Forest) -> Tensor2:
    trees = f.trees
    if not trees:
        return Tensor2._build({(EMPTY, EMPTY): _NEG_LAMBDA})
    if len(trees) == 1:
        t = trees[0]
        if t.children is None:
            return Tensor2._build({(f, f): LambdaPoly.coerce(1)})
        acc = {(f, EMPTY): _NEG_LAMBDA}
        for (u, w), p in _coproduct(t.children).items():
            _accumulate(acc, (u, Forest((Tree(t.label, w),))), p)
        return Tensor2._build(acc)
    first = Forest(trees[:1])
    rest = Forest(trees[1:])
    acc: dict = {}
    for (u, w), p in _coproduct(rest).items():
        _accumulate(acc, (first * u, w), p)
    for (u, w), p in _coproduct(first).items():
        _accumulate(acc, (u, w * rest), p)
    _accumulate(acc, (first, rest), LAMBDA)
    return Tensor2._build(acc)


def coproduct_lin(v: LinComb | Forest | Tree) -> Tensor2:
    if not isinstance(v, LinComb):
        return _coproduct(as_forest(v))
    acc: dict = {}
    for f, p in v.items():
        for key, q in _coproduct(f).items():
            _accumulate(acc, key, p * q)
    return Tensor2._build(acc)


def dotword_coproduct_closed(word: Sequence[str] | Forest, alphabets: Alphabets | None = None) -> Tensor2:
    """Closed form of the coproduct of a word of generator dots ``x1 ... xm``.

    ``sum_i x1..xi (x) xi..xm + lambda sum_i x1..xi (x) x(i+1)..xm``.
    Computed directly from the word, without the recursive coproduct.
    """
    if isinstance(word, Forest):
        for t in word.trees:
            if t.children is not None:
                raise DecorationError(f"{t.label!r} is not a generator dot")
        names = [t.label for t in word.trees]
    else:
        names = list(word)
        for x in names:
            if alphabets is not None and x not in alphabets.X:
                raise DecorationError(f"{x!r} is not a generator in X")
    m = len(names)
    if m < 1:
        raise ValueError("the closed form needs a word of length at least 1")
    dots = [Tree(x) for x in names]
    acc: dict = {}
    for i in range(1, m + 1):
        _accumulate(acc, (Forest(dots[:i]), Forest(dots[i - 1 :])), LambdaPoly.coerce(1))
    for i in range(1, m):
        _accumulate(acc, (Forest(dots[:i]), Forest(dots[i:])), LAMBDA)
    return Tensor2._build(acc)


def coassoc_defect(f: Forest | Tree) -> Tensor3:
    """``(Delta (x) id) Delta(f) - (id (x) Delta) Delta(f)``."""
    d = _coproduct(as_forest(f))
    return coapply_left(_coproduct, d) - coapply_right(_coproduct, d)


def leibniz_defect(f, g) -> Tensor2:
    """``Delta(fg) - f.Delta(g) - Delta(f).g - lambda (f (x) g)``."""
    f = f if isinstance(f, LinComb) else LinComb.of(f)
    g = g if isinstance(g, LinComb) else LinComb.of(g)
    lhs = coproduct_lin(f * g)
    rhs = dot_left(f, coproduct_lin(g)) + dot_right(coproduct_lin(f), g) + LAMBDA * tensor_of(f, g)
    return lhs - rhs


def cocycle_defect(omega: str, f, alphabets: Alphabets | None = None) -> Tensor2:
    """``Delta B(f) - B(f) (x) (-lambda ()) - (id (x) B) Delta(f)`` for ``B = B+_omega``."""
    if alphabets is not None and omega not in alphabets.Omega:
        raise DecorationError(f"{omega!r} is not an operator in Omega")
    f = f if isinstance(f, LinComb) else LinComb.of(f)
    grafted = bplus(omega, f)
    lhs = coproduct_lin(grafted)
    rhs = _NEG_LAMBDA * tensor_of(grafted, EMPTY) + apply_right(lambda w: bplus(omega, w), coproduct_lin(f))
    return lhs - rhs


def is_group_like(v, weight: Scalar = 1) -> bool:
    """True iff ``Delta(v) == weight * (v (x) v)`` exactly."""
    v = v if isinstance(v, LinComb) else LinComb.of(v)
    return coproduct_lin(v) == LambdaPoly.coerce(weight) * tensor_of(v, v)


def clear_cache() -> None:
    _coproduct.cache_clear()
