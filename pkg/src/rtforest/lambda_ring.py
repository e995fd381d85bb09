"""Integer polynomials in the weight indeterminate lambda.

Every structure constant of the forest bialgebra is an integer polynomial in
the weight, so all computations are carried out in Z[lambda] and only
specialized to a rational value on request.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["LambdaPoly", "LAMBDA", "ONE", "ZERO", "poly_add", "poly_mul", "poly_eval"]

Scalar = Union[int, "LambdaPoly"]


class LambdaPoly:
    """Sparse polynomial ``sum c_e * lambda**e`` with integer coefficients.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + int(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, coeffs: dict[int, int]) -> LambdaPoly:
        # caller guarantees no zero entries
        p = object.__new__(cls)
        p._coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def coerce(cls, value: Scalar) -> LambdaPoly:
        if isinstance(value, LambdaPoly):
            return value
        if isinstance(value, int):
            return cls._raw({0: value} if value else {})
        raise TypeError(f"cannot use {type(value).__name__} as a lambda-polynomial")

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LambdaPoly.coerce(other)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                # agree with int hashing so that p == n implies hash(p) == hash(n)
                self._hash = hash(self._coeffs.get(0, 0))
            else:
                self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __add__(self, other: Scalar) -> LambdaPoly:
        try:
            other = LambdaPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return LambdaPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> LambdaPoly:
        return LambdaPoly._raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Scalar) -> LambdaPoly:
        try:
            other = LambdaPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LambdaPoly:
        return LambdaPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LambdaPoly:
        if not isinstance(other, (int, LambdaPoly)):
            return NotImplemented
        other = LambdaPoly.coerce(other)
        if not self._coeffs or not other._coeffs:
            return ZERO
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LambdaPoly._raw({e: c for e, c in sorted(acc.items()) if c})

    def __rmul__(self, other: Scalar) -> LambdaPoly:
        if not isinstance(other, (int, LambdaPoly)):
            return NotImplemented
        return self * other

    def __pow__(self, n: int) -> LambdaPoly:
        if n < 0:
            raise ValueError("negative power")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, value) -> Fraction:
        return self.evaluate(value)

    def evaluate(self, value) -> Fraction:
        """Exact value at ``lambda = value`` via Horner's scheme."""
        v = Fraction(value)
        acc = Fraction(0)
        for e in range(self.degree, -1, -1):
            acc = acc * v + self._coeffs.get(e, 0)
        return acc

    # text and JSON forms

    def to_text(self, symbol: str = "λ") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = symbol if e == 1 else f"{symbol}^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LambdaPoly({self.to_text()!r})"

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in sorted(self._coeffs.items(), reverse=True)]

    @classmethod
    def from_json(cls, data) -> LambdaPoly:
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be an array of [exponent, coefficient] pairs")
        pairs = []
        for item in data:
            if not (isinstance(item, list) and len(item) == 2):
                raise ValueError(f"malformed polynomial term {item!r}")
            e, c = item
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"malformed exponent {e!r}")
            if not isinstance(c, str) or not re.fullmatch(r"[+-]?\d+", c):
                raise ValueError(f"coefficient must be an integer string, got {c!r}")
            pairs.append((e, int(c)))
        return cls(pairs)

    @classmethod
    def parse(cls, text: str) -> LambdaPoly:
        """Parse the textual form, e.g. ``"λ^2 - 1"``, ``"-3lambda + 2"``."""
        from .text import parse_poly

        return parse_poly(text)


ZERO = LambdaPoly._raw({})
ONE = LambdaPoly._raw({0: 1})
LAMBDA = LambdaPoly._raw({1: 1})


def poly_add(p: Scalar, q: Scalar) -> LambdaPoly:
    return LambdaPoly.coerce(p) + q


def poly_mul(p: Scalar, q: Scalar) -> LambdaPoly:
    return LambdaPoly.coerce(p) * q


def poly_eval(p: Scalar, value) -> Fraction:
    return LambdaPoly.coerce(p).evaluate(value)
