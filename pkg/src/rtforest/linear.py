"""The free Z[lambda]-module on forests, its tensor square and cube.

Elements are sparse maps from basis keys to :class:`LambdaPoly`; zero
coefficients are never stored, so equality of two elements is plain
equality of their term maps.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, TypeVar, Union

from .forest import EMPTY, DecorationError, Forest, Tree, as_forest, render
from .lambda_ring import ONE, LambdaPoly, Scalar

__all__ = [
    "LinComb",
    "Tensor2",
    "Tensor3",
    "apply_left",
    "apply_right",
    "bplus",
    "coapply_left",
    "coapply_right",
    "dot_left",
    "dot_right",
    "lc_add",
    "lc_scale",
    "mul",
    "tensor3_of",
    "tensor_of",
    "unit",
]

S = TypeVar("S", bound="_Sparse")
ForestLike = Union[Forest, Tree]


def _accumulate(acc: dict, key, coeff: LambdaPoly) -> None:
    prev = acc.get(key)
    acc[key] = coeff if prev is None else prev + coeff


class _Sparse:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, coeff in items:
            _accumulate(acc, self._check_key(key), LambdaPoly.coerce(coeff))
        self._terms = {k: c for k, c in acc.items() if c}

    @staticmethod
    def _check_key(key):
        return key

    @classmethod
    def _build(cls: type[S], acc: dict) -> S:
        obj = object.__new__(cls)
        obj._terms = {k: c for k, c in acc.items() if c}
        return obj

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, key) -> LambdaPoly:
        return self._terms.get(self._check_key(key), LambdaPoly.coerce(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self: S, other: S) -> S:
        if isinstance(other, int) and other == 0:
            return self
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(acc, k, c)
        return self._build(acc)

    def __radd__(self: S, other) -> S:
        # supports sum() with its default start of 0
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self: S) -> S:
        return self._build({k: -c for k, c in self._terms.items()})

    def __sub__(self: S, other: S) -> S:
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __rmul__(self: S, scalar: Scalar) -> S:
        if not isinstance(scalar, (int, LambdaPoly)):
            return NotImplemented
        p = LambdaPoly.coerce(scalar)
        if not p:
            return self._build({})
        return self._build({k: p * c for k, c in self._terms.items()})

    def specialize(self, value) -> dict:
        """Term map with the weight set to a rational ``value``; zero terms dropped."""
        out = {}
        for k, c in self._terms.items():
            v = c.evaluate(value)
            if v:
                out[k] = v
        return out

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kc: self.sort_key(kc[0]))


def forest_sort_key(f: Forest) -> tuple[int, str]:
    return (f.size, render(f))


class LinComb(_Sparse):
    """An element of the free module spanned by forests."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        if isinstance(key, Tree):
            return Forest((key,))
        if not isinstance(key, Forest):
            raise TypeError(f"LinComb keys are forests, got {type(key).__name__}")
        return key

    @classmethod
    def of(cls, f: ForestLike, coeff: Scalar = 1) -> LinComb:
        return cls({as_forest(f): coeff})

    @staticmethod
    def sort_key(f: Forest):
        return forest_sort_key(f)

    def __mul__(self, other):
        if isinstance(other, (LinComb, Forest, Tree)):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Forest, Tree)):
            return mul(other, self)
        return _Sparse.__rmul__(self, other)

    def __str__(self) -> str:
        from .text import serialize_lincomb

        return serialize_lincomb(self)

    def __repr__(self) -> str:
        return f"LinComb({str(self)!r})"


class Tensor2(_Sparse):
    """An element of the tensor square, stored over pairs of basis forests."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        a, b = key
        return (as_forest(a), as_forest(b))

    @staticmethod
    def sort_key(key):
        return (sum(f.size for f in key), tuple(render(f) for f in key))

    def __str__(self) -> str:
        from .text import serialize_tensor

        return serialize_tensor(self)

    def __repr__(self) -> str:
        return f"Tensor2({str(self)!r})"


class Tensor3(_Sparse):
    """An element of the tensor cube, stored over triples of basis forests."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        a, b, c = key
        return (as_forest(a), as_forest(b), as_forest(c))

    sort_key = staticmethod(Tensor2.sort_key)

    def __str__(self) -> str:
        from .text import serialize_tensor

        return serialize_tensor(self)

    def __repr__(self) -> str:
        return f"Tensor3({str(self)!r})"


def _lin(v: LinComb | ForestLike) -> LinComb:
    if isinstance(v, LinComb):
        return v
    return LinComb.of(v)


def unit() -> LinComb:
    """The algebra unit: the empty forest with coefficient one."""
    return LinComb({EMPTY: ONE})


def lc_add(u, v):
    return u + v


def lc_scale(p: Scalar, v: S) -> S:
    return LambdaPoly.coerce(p) * v


def mul(u: LinComb | ForestLike, v: LinComb | ForestLike) -> LinComb:
    """Bilinear extension of concatenation."""
    u, v = _lin(u), _lin(v)
    acc: dict = {}
    for f, p in u.items():
        for g, q in v.items():
            _accumulate(acc, f * g, p * q)
    return LinComb._build(acc)


def bplus(omega: str, v: LinComb | ForestLike, alphabets=None) -> LinComb:
    """Linear grafting ``B+_omega`` applied term-wise."""
    if alphabets is not None and omega not in alphabets.Omega:
        raise DecorationError(f"{omega!r} is not an operator in Omega")
    v = _lin(v)
    return LinComb._build({Forest((Tree(omega, f),)): p for f, p in v.items()})


def tensor_of(u: LinComb | ForestLike, v: LinComb | ForestLike) -> Tensor2:
    u, v = _lin(u), _lin(v)
    acc: dict = {}
    for f, p in u.items():
        for g, q in v.items():
            _accumulate(acc, (f, g), p * q)
    return Tensor2._build(acc)


def tensor3_of(u, v, w) -> Tensor3:
    u, v, w = _lin(u), _lin(v), _lin(w)
    acc: dict = {}
    for f, p in u.items():
        for g, q in v.items():
            pq = p * q
            for h, r in w.items():
                _accumulate(acc, (f, g, h), pq * r)
    return Tensor3._build(acc)


def dot_left(a: LinComb | ForestLike, t: Tensor2) -> Tensor2:
    """Left action ``a.(b (x) c) = ab (x) c``."""
    a = _lin(a)
    acc: dict = {}
    for f, p in a.items():
        for (u, w), q in t.items():
            _accumulate(acc, (f * u, w), p * q)
    return Tensor2._build(acc)


def dot_right(t: Tensor2, a: LinComb | ForestLike) -> Tensor2:
    """Right action ``(b (x) c).a = b (x) ca``."""
    a = _lin(a)
    acc: dict = {}
    for (u, w), q in t.items():
        for f, p in a.items():
            _accumulate(acc, (u, w * f), q * p)
    return Tensor2._build(acc)


def apply_left(op: Callable[[Forest], LinComb], t: Tensor2) -> Tensor2:
    """``(op (x) id)`` for a linear operator given on basis forests."""
    acc: dict = {}
    for (u, w), q in t.items():
        for u2, p in op(u).items():
            _accumulate(acc, (u2, w), q * p)
    return Tensor2._build(acc)


def apply_right(op: Callable[[Forest], LinComb], t: Tensor2) -> Tensor2:
    """``(id (x) op)`` for a linear operator given on basis forests."""
    acc: dict = {}
    for (u, w), q in t.items():
        for w2, p in op(w).items():
            _accumulate(acc, (u, w2), q * p)
    return Tensor2._build(acc)


def coapply_left(op: Callable[[Forest], Tensor2], t: Tensor2) -> Tensor3:
    """``(op (x) id)`` for an operator into the tensor square, landing in the cube."""
    acc: dict = {}
    for (u, w), q in t.items():
        for (a, b), p in op(u).items():
            _accumulate(acc, (a, b, w), q * p)
    return Tensor3._build(acc)


def coapply_right(op: Callable[[Forest], Tensor2], t: Tensor2) -> Tensor3:
    """``(id (x) op)`` for an operator into the tensor square, landing in the cube."""
    acc: dict = {}
    for (u, w), q in t.items():
        for (a, b), p in op(w).items():
            _accumulate(acc, (u, a, b), q * p)
    return Tensor3._build(acc)
