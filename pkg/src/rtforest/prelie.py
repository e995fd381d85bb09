"""Pre-Lie product ``a |> b = sum b(1) a b(2)`` built from the weighted coproduct."""

from __future__ import annotations

from .coalgebra import coproduct_lin
from .linear import LinComb, _accumulate

__all__ = ["prelie", "prelie_defect"]


def _lin(v) -> LinComb:
    return v if isinstance(v, LinComb) else LinComb.of(v)


def prelie(a, b) -> LinComb:
    a, b = _lin(a), _lin(b)
    acc: dict = {}
    for (u, w), p in coproduct_lin(b).items():
        for f, q in a.items():
            _accumulate(acc, u * f * w, p * q)
    return LinComb._build(acc)


def prelie_defect(a, b, c) -> LinComb:
    """Left pre-Lie defect ``(a|>b)|>c - a|>(b|>c) - (b|>a)|>c + b|>(a|>c)``."""
    a, b, c = _lin(a), _lin(b), _lin(c)
    return prelie(prelie(a, b), c) - prelie(a, prelie(b, c)) - prelie(prelie(b, a), c) + prelie(b, prelie(a, c))
