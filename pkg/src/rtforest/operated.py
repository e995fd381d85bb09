"""Operated-algebra targets and the universal morphism out of the forest algebra.

A target bundles a unit, an associative product and one unary operator per
operator name.  Given images for the generators, the forest algebra maps
into the target by

    () -> unit,  x -> f(x),  B+_w(F) -> P_w(image of F),  F G -> image(F) image(G)

extended linearly.  When the target also carries a coproduct the map can be
checked against the weighted coproduct on forests.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from .coalgebra import coproduct, coproduct_lin
from .forest import Alphabets, DecorationError, Forest, Tree, as_forest
from .lambda_ring import ZERO
from .linear import LinComb, bplus, mul, tensor_of, unit

__all__ = [
    "GroupLikeUncheckedWarning",
    "MorphismError",
    "OperatedTarget",
    "UniversalMorphism",
    "bialgebra_morphism_defects",
    "check_bialgebra_morphism",
    "forest_target",
    "relabel_assignment",
    "universal_morphism",
]


class MorphismError(ValueError):
    """Generator data or target operations are missing or inconsistent."""


class GroupLikeUncheckedWarning(UserWarning):
    """The target has no coproduct, so generator images were not checked to be group-like."""


@dataclass
class OperatedTarget:
    """An operated algebra given as plain callables.

    Elements must support ``+`` and multiplication by a ``LambdaPoly`` on
    the left.  ``coproduct`` and ``tensor`` are optional; with both present
    the target is treated as a weighted infinitesimal bialgebra.
    """

    unit: Any
    mul: Callable[[Any, Any], Any]
    ops: Mapping[str, Callable[[Any], Any]]
    coproduct: Callable[[Any], Any] | None = None
    tensor: Callable[[Any, Any], Any] | None = None
    name: str = "target"

    @property
    def has_coproduct(self) -> bool:
        return self.coproduct is not None and self.tensor is not None

    def zero(self):
        return ZERO * self.unit

    def spot_check(self, elements: Iterable[Any]) -> None:
        """Check unit and associativity laws on the given elements."""
        elements = list(elements)
        for a in elements:
            if self.mul(self.unit, a) != a or self.mul(a, self.unit) != a:
                raise MorphismError(f"{self.name}: unit law fails on {a}")
        for a in elements:
            for b in elements:
                for c in elements:
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise MorphismError(f"{self.name}: product is not associative on {a}, {b}, {c}")


def _grafting(omega: str) -> Callable[[LinComb], LinComb]:
    return lambda v: bplus(omega, v)


def forest_target(operators: Iterable[str], name: str = "H_RT") -> OperatedTarget:
    """The forest algebra itself, with the grafting operator for each name in ``operators``."""
    return OperatedTarget(
        unit=unit(),
        mul=mul,
        ops={w: _grafting(w) for w in operators},
        coproduct=coproduct_lin,
        tensor=tensor_of,
        name=name,
    )


def relabel_assignment(sigma: Mapping[str, str], alphabets: Alphabets) -> dict[str, LinComb]:
    """Generator images ``x -> •sigma(x)``; names missing from ``sigma`` map to themselves."""
    out = {}
    for x in alphabets.X:
        y = sigma.get(x, x)
        if y in alphabets.Omega:
            raise DecorationError(f"relabeling sends {x!r} to the operator name {y!r}")
        out[x] = LinComb.of(Tree(y))
    unknown = set(sigma) - set(alphabets.X)
    if unknown:
        raise DecorationError(f"relabeling mentions names outside X: {sorted(unknown)}")
    return out


@dataclass
class UniversalMorphism:
    """The operated-algebra morphism determined by generator images."""

    assignment: Mapping[str, Any]
    target: OperatedTarget
    _memo: dict = field(default_factory=dict, repr=False)

    def __call__(self, v):
        if isinstance(v, LinComb):
            result = self.target.zero()
            for f, p in v.items():
                result = result + p * self._forest(f)
            return result
        return self._forest(as_forest(v))

    def _forest(self, f: Forest):
        hit = self._memo.get(f)
        if hit is not None:
            return hit
        if not f.trees:
            result = self.target.unit
        else:
            result = self._tree(f.trees[0])
            for t in f.trees[1:]:
                result = self.target.mul(result, self._tree(t))
        self._memo[f] = result
        return result

    def _tree(self, t: Tree):
        if t.children is None:
            try:
                return self.assignment[t.label]
            except KeyError:
                raise MorphismError(f"no image for generator {t.label!r}") from None
        try:
            op = self.target.ops[t.label]
        except KeyError:
            raise MorphismError(f"{self.target.name} has no operator {t.label!r}") from None
        return op(self._forest(t.children))


def universal_morphism(
    assignment: Mapping[str, Any],
    target: OperatedTarget,
    alphabets: Alphabets,
    *,
    check_group_like: bool = True,
) -> UniversalMorphism:
    """Build the unique morphism extending ``assignment`` (a map from X-names).

    Every generator needs an image and every operator name an operator.
    Images must be group-like (``Delta f(x) = f(x) (x) f(x)``) when the
    target has a coproduct; otherwise a warning records that the check was
    skipped.
    """
    missing = [x for x in alphabets.X if x not in assignment]
    if missing:
        raise MorphismError(f"no image for generators {missing}")
    no_op = [w for w in alphabets.Omega if w not in target.ops]
    if no_op:
        raise MorphismError(f"{target.name} has no operator for {no_op}")
    if check_group_like:
        if target.has_coproduct:
            for x in alphabets.X:
                img = assignment[x]
                if target.coproduct(img) != target.tensor(img, img):
                    raise MorphismError(f"image of {x!r} is not group-like")
        elif alphabets.X:
            warnings.warn(
                f"{target.name} has no coproduct; generator images not checked to be group-like",
                GroupLikeUncheckedWarning,
                stacklevel=2,
            )
    return UniversalMorphism(dict(assignment), target)


def _pushforward(fbar: UniversalMorphism, f: Forest):
    t = fbar.target
    result = t.tensor(t.zero(), t.zero())
    for (u, w), p in coproduct(f).items():
        result = result + p * t.tensor(fbar(u), fbar(w))
    return result


def bialgebra_morphism_defects(fbar: UniversalMorphism, forests: Iterable[Forest]) -> Iterable[Forest]:
    """Forests ``F`` with ``Delta(fbar F) != (fbar (x) fbar) Delta(F)``."""
    t = fbar.target
    if not t.has_coproduct:
        raise MorphismError(f"{t.name} has no coproduct to compare against")
    for f in forests:
        f = as_forest(f)
        lhs = t.coproduct(fbar(f))
        if lhs != _pushforward(fbar, f):
            yield f


def check_bialgebra_morphism(fbar: UniversalMorphism, forests: Iterable[Forest]) -> bool:
    for _ in bialgebra_morphism_defects(fbar, forests):
        return False
    return True
