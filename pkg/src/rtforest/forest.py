"""Decorated planar rooted trees and forests.

Vertices carry a decoration from ``X`` (generators) or ``Omega`` (operator
indices).  Only Omega-decorated vertices may have children, so the two kinds
of vertex are kept structurally distinct: an X-vertex has ``children is
None`` while an Omega-vertex always has a (possibly empty) child forest.
This makes every constructed value valid by construction; the alphabets are
only consulted when names enter from outside.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Alphabets",
    "DecorationError",
    "EMPTY",
    "Forest",
    "Tree",
    "as_forest",
    "breadth",
    "concat",
    "count_forests",
    "depth",
    "dot_word",
    "enumerate_forests",
    "forests_up_to",
    "is_valid",
    "graft",
    "leaf",
    "render",
    "validate",
    "vertex_count",
]

RESERVED_NAMES = frozenset({"λ", "lambda"})


class DecorationError(ValueError):
    """A decoration name is undeclared or used in a position it may not occupy."""


def _check_name(name: str) -> None:
    if not isinstance(name, str) or not name:
        raise DecorationError(f"invalid decoration name {name!r}")
    if name in RESERVED_NAMES:
        raise DecorationError(f"{name!r} is reserved for the weight")
    if name[0].isdigit() or not all(ch.isalnum() or ch == "_" for ch in name):
        raise DecorationError(
            f"decoration names are letters, digits and underscores not starting with a digit: {name!r}"
        )


@dataclass(frozen=True)
class Alphabets:
    """Declared decoration sets; the order of each tuple is significant only for sorting."""

    X: tuple[str, ...]
    Omega: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(self.X))
        object.__setattr__(self, "Omega", tuple(self.Omega))
        for name in self.X + self.Omega:
            _check_name(name)
        if len(set(self.X)) != len(self.X) or len(set(self.Omega)) != len(self.Omega):
            raise DecorationError("duplicate decoration name")
        clash = set(self.X) & set(self.Omega)
        if clash:
            raise DecorationError(f"X and Omega must be disjoint; shared: {sorted(clash)}")

    def is_generator(self, name: str) -> bool:
        return name in self.X

    def is_operator(self, name: str) -> bool:
        return name in self.Omega

    def __contains__(self, name: str) -> bool:
        return name in self.X or name in self.Omega


class Tree:
    """A decorated planar rooted tree.

    ``children`` is ``None`` for an X-decorated vertex and a :class:`Forest`
    for an Omega-decorated one (the empty forest for a bare operator dot).
    """

    __slots__ = ("label", "children", "_hash", "_size")

    def __init__(self, label: str, children: Forest | None = None):
        if children is not None and not isinstance(children, Forest):
            children = Forest(children)
        self.label = label
        self.children = children
        self._hash = hash((label, children))
        self._size = 1 + (children.size if children is not None else 0)

    @property
    def is_generator(self) -> bool:
        return self.children is None

    @property
    def size(self) -> int:
        return self._size

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return self._hash == other._hash and self.label == other.label and self.children == other.children

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tree({_render_tree(self)!r})"


class Forest:
    """A planar rooted forest: an ordered, possibly empty, sequence of trees."""

    __slots__ = ("trees", "_hash", "_size")

    def __init__(self, trees: Iterable[Tree] = ()):
        trees = tuple(trees)
        for t in trees:
            if not isinstance(t, Tree):
                raise TypeError(f"forest components must be trees, got {type(t).__name__}")
        self.trees = trees
        self._hash = hash(trees)
        self._size = sum(t.size for t in trees)

    @property
    def size(self) -> int:
        return self._size

    @property
    def breadth(self) -> int:
        return len(self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Forest(self.trees[i])
        return self.trees[i]

    def __bool__(self) -> bool:
        return bool(self.trees)

    def __mul__(self, other: Forest) -> Forest:
        if not isinstance(other, Forest):
            return NotImplemented
        if not other.trees:
            return self
        if not self.trees:
            return other
        return Forest(self.trees + other.trees)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Forest):
            return NotImplemented
        return self._hash == other._hash and self.trees == other.trees

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Forest({render(self)!r})"


EMPTY = Forest()


def _render_tree(t: Tree) -> str:
    if not t.children:
        return t.label
    return f"{t.label}[{render(t.children)}]"


def render(f: Forest) -> str:
    """Canonical text of a forest; the parser lives in :mod:`rtforest.text`."""
    if not f.trees:
        return "()"
    return " ".join(_render_tree(t) for t in f.trees)


def leaf(name: str, alphabets: Alphabets) -> Tree:
    """The one-vertex tree decorated by ``name``."""
    if name in alphabets.X:
        return Tree(name)
    if name in alphabets.Omega:
        return Tree(name, EMPTY)
    raise DecorationError(f"undeclared decoration {name!r}")


def graft(omega: str, f: Forest | Tree, alphabets: Alphabets | None = None) -> Tree:
    """Attach the roots of ``f``, in order, below a new root decorated ``omega``.

    Without alphabets the name is trusted to be an operator.
    """
    if alphabets is not None and omega not in alphabets.Omega:
        if omega in alphabets.X:
            raise DecorationError(f"{omega!r} is in X and cannot decorate an internal vertex")
        raise DecorationError(f"undeclared operator {omega!r}")
    return Tree(omega, as_forest(f))


def as_forest(f: Forest | Tree) -> Forest:
    if isinstance(f, Tree):
        return Forest((f,))
    if isinstance(f, Forest):
        return f
    return Forest(f)


def concat(*parts: Forest | Tree) -> Forest:
    """Concatenate forests (or single trees) left to right."""
    trees: list[Tree] = []
    for f in parts:
        trees.extend(as_forest(f).trees)
    return Forest(trees)


def dot_word(word: Sequence[str], alphabets: Alphabets | None = None) -> Forest:
    """Forest of X-dots ``•x1 ... •xm``."""
    if alphabets is not None:
        for x in word:
            if x not in alphabets.X:
                raise DecorationError(f"{x!r} is not a generator in X")
    return Forest(Tree(x) for x in word)


def breadth(f: Forest | Tree) -> int:
    return len(as_forest(f).trees)


def vertex_count(f: Forest | Tree) -> int:
    return f.size


def depth(f: Forest | Tree) -> int:
    """Grafting depth: X-dots have depth 0 and each grafting adds one."""
    return max((_tree_depth(t) for t in as_forest(f).trees), default=0)


def _tree_depth(t: Tree) -> int:
    if t.children is None:
        return 0
    return 1 + depth(t.children)


def validate(f: Forest | Tree, alphabets: Alphabets) -> None:
    """Raise :class:`DecorationError` unless every decoration is declared in the right set."""
    stack = list(as_forest(f).trees)
    while stack:
        t = stack.pop()
        if t.children is None:
            if t.label not in alphabets.X:
                raise DecorationError(f"generator vertex decorated by {t.label!r}, which is not in X")
        else:
            if t.label not in alphabets.Omega:
                raise DecorationError(f"operator vertex decorated by {t.label!r}, which is not in Omega")
            stack.extend(t.children.trees)


def is_valid(f: Forest, alphabets: Alphabets) -> bool:
    try:
        validate(f, alphabets)
    except DecorationError:
        return False
    return True


@lru_cache(maxsize=None)
def _trees(n: int, X: tuple[str, ...], Omega: tuple[str, ...]) -> tuple[Tree, ...]:
    if n <= 0:
        return ()
    if n == 1:
        return tuple(Tree(x) for x in X) + tuple(Tree(w, EMPTY) for w in Omega)
    return tuple(Tree(w, f) for w in Omega for f in _forests(n - 1, X, Omega))


@lru_cache(maxsize=None)
def _forests(n: int, X: tuple[str, ...], Omega: tuple[str, ...]) -> tuple[Forest, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for k in range(1, n + 1):
        for t in _trees(k, X, Omega):
            for rest in _forests(n - k, X, Omega):
                out.append(Forest((t,) + rest.trees))
    return tuple(out)


def enumerate_forests(n: int, alphabets: Alphabets) -> list[Forest]:
    """All valid forests with exactly ``n`` vertices, sorted by canonical text."""
    if n < 0:
        return []
    return sorted(_forests(n, alphabets.X, alphabets.Omega), key=render)


def forests_up_to(n: int, alphabets: Alphabets) -> list[Forest]:
    """All valid forests with at most ``n`` vertices, by size then canonical text."""
    out: list[Forest] = []
    for k in range(n + 1):
        out.extend(enumerate_forests(k, alphabets))
    return out


def count_forests(n: int, n_generators: int, n_operators: int) -> int:
    """Number of forests with ``n`` vertices, by the size recursion on trees.

    Independent of the enumerator above; used to cross-check it.
    """
    trees = [0] * (n + 1)
    forests = [0] * (n + 1)
    forests[0] = 1
    for m in range(1, n + 1):
        trees[m] = (n_generators + n_operators) if m == 1 else n_operators * forests[m - 1]
        forests[m] = sum(trees[k] * forests[m - k] for k in range(1, m + 1))
    return forests[n]
