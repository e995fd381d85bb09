"""Path algebra of a quiver with its weight-zero infinitesimal coproduct.

A path of length ``n >= 2`` has coproduct::

    s(a1) (x) a2...an + a1...a(n-1) (x) t(an) + sum_{i=1}^{n-2} a1...ai (x) a(i+2)...an

an arrow ``a`` goes to ``s(a) (x) t(a)`` and a vertex to zero.  Coefficients
are rationals; the weight is identically zero here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path as FsPath
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Arrow",
    "Path",
    "PathLinComb",
    "PathTensor",
    "Quiver",
    "QuiverError",
    "path_coassoc_defect",
    "path_coproduct",
    "path_coproduct_lin",
    "path_dot_left",
    "path_dot_right",
    "path_leibniz_defect",
    "path_mul",
    "path_mul_lin",
]


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A vertex (``arrows == ()``) or a composable arrow sequence."""

    source: str
    target: str
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if not self.arrows:
            if self.source != self.target:
                raise QuiverError("a length-0 path is a single vertex")
            return
        if self.arrows[0].source != self.source or self.arrows[-1].target != self.target:
            raise QuiverError("path endpoints disagree with its arrows")
        for a, b in zip(self.arrows, self.arrows[1:]):
            if a.target != b.source:
                raise QuiverError(f"arrows {a.name} and {b.name} are not composable")

    @classmethod
    def vertex(cls, v: str) -> Path:
        return cls(v, v)

    @classmethod
    def of(cls, arrows: Iterable[Arrow]) -> Path:
        arrows = tuple(arrows)
        if not arrows:
            raise QuiverError("use Path.vertex for length-0 paths")
        return cls(arrows[0].source, arrows[-1].target, arrows)

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return "·".join(a.name for a in self.arrows)

    def sort_key(self):
        return (self.length, str(self))


class _RationalSparse:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for k, c in items:
            acc[k] = acc.get(k, 0) + Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c}

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        return type(self)({k: scalar * c for k, c in self._terms.items()})

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __str__(self) -> str:
        items = sorted(self._terms.items(), key=lambda kc: self._key_order(kc[0]))
        out = []
        for key, c in items:
            body = self._render_key(key)
            term = f"{abs(c)}·({body})"
            if not out:
                out.append(("-" if c < 0 else "") + term)
            else:
                out.append((" - " if c < 0 else " + ") + term)
        return "".join(out) or "0"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class PathLinComb(_RationalSparse):
    __slots__ = ()

    @staticmethod
    def _key_order(p: Path):
        return p.sort_key()

    @staticmethod
    def _render_key(p: Path) -> str:
        return str(p)


class PathTensor(_RationalSparse):
    """Element of a tensor power of the path algebra, keyed by tuples of paths."""

    __slots__ = ()

    @staticmethod
    def _key_order(key):
        return tuple(p.sort_key() for p in key)

    @staticmethod
    def _render_key(key) -> str:
        return " ⊗ ".join(str(p) for p in key)


class Quiver:
    """Finite directed multigraph ``(vertices, arrows, s, t)``."""

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow | tuple[str, str, str]]):
        self.vertices = tuple(dict.fromkeys(vertices))
        vs = set(self.vertices)
        self.arrows: dict[str, Arrow] = {}
        for a in arrows:
            if not isinstance(a, Arrow):
                source, target, name = a
                a = Arrow(name, source, target)
            if a.source not in vs or a.target not in vs:
                raise QuiverError(f"arrow {a.name} joins undeclared vertices {a.source}->{a.target}")
            if a.name in self.arrows:
                raise QuiverError(f"duplicate arrow name {a.name!r}")
            self.arrows[a.name] = a

    @classmethod
    def from_edge_list(cls, text: str) -> Quiver:
        """One ``source target name`` triple per line.

        A line holding a single token declares an isolated vertex; blank
        lines and ``#`` comments are ignored.
        """
        vertices: list[str] = []
        arrows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) == 1:
                vertices.append(parts[0])
            elif len(parts) == 3:
                s, t, name = parts
                vertices.extend((s, t))
                arrows.append(Arrow(name, s, t))
            else:
                raise QuiverError(f"line {lineno}: expected 'source target name', got {line!r}")
        return cls(vertices, arrows)

    @classmethod
    def from_json(cls, data) -> Quiver:
        """``{"vertices": [...], "arrows": [{"name", "source", "target"}, ...]}``."""
        if isinstance(data, str):
            data = json.loads(data)
        try:
            arrows = [Arrow(a["name"], a["source"], a["target"]) for a in data.get("arrows", [])]
            vertices = list(data.get("vertices", []))
        except (KeyError, TypeError, AttributeError) as exc:
            raise QuiverError(f"malformed quiver JSON: {exc}") from exc
        for a in arrows:
            for v in (a.source, a.target):
                if v not in vertices:
                    raise QuiverError(f"arrow {a.name} uses undeclared vertex {v!r}")
        return cls(vertices, arrows)

    @classmethod
    def load(cls, path: str | FsPath) -> Quiver:
        text = FsPath(path).read_text(encoding="utf-8")
        if str(path).endswith(".json") or text.lstrip().startswith("{"):
            return cls.from_json(text)
        return cls.from_edge_list(text)

    def vertex(self, v: str) -> Path:
        if v not in self.vertices:
            raise QuiverError(f"unknown vertex {v!r}")
        return Path.vertex(v)

    def path(self, *names: str) -> Path:
        try:
            return Path.of(self.arrows[n] for n in names)
        except KeyError as exc:
            raise QuiverError(f"unknown arrow {exc.args[0]!r}") from None

    def unit(self) -> PathLinComb:
        """Sum of all vertices, the unit of the path algebra."""
        return PathLinComb({Path.vertex(v): 1 for v in self.vertices})

    def paths(self, max_length: int) -> list[Path]:
        """All paths of length at most ``max_length``, by length then arrow order."""
        out = [Path.vertex(v) for v in self.vertices]
        frontier = [Path.of((a,)) for a in self.arrows.values()] if max_length >= 1 else []
        length = 1
        while frontier:
            out.extend(frontier)
            if length == max_length:
                break
            frontier = [
                Path(p.source, a.target, p.arrows + (a,))
                for p in frontier
                for a in self.arrows.values()
                if a.source == p.target
            ]
            length += 1
        return out


def _concat(p: Path, q: Path) -> Path:
    if not p.arrows:
        return q
    if not q.arrows:
        return p
    return Path(p.source, q.target, p.arrows + q.arrows)


def path_mul(p: Path, q: Path) -> PathLinComb:
    """Concatenation when ``t(p) == s(q)``, zero otherwise."""
    if p.target != q.source:
        return PathLinComb()
    return PathLinComb({_concat(p, q): 1})


def path_mul_lin(u: PathLinComb, v: PathLinComb) -> PathLinComb:
    terms = []
    for p, a in u.items():
        for q, b in v.items():
            if p.target == q.source:
                terms.append((_concat(p, q), a * b))
    return PathLinComb(terms)


def _sub(arrows: tuple[Arrow, ...]) -> Path:
    return Path.of(arrows)


def path_coproduct(p: Path) -> PathTensor:
    a = p.arrows
    n = len(a)
    if n == 0:
        return PathTensor()
    if n == 1:
        return PathTensor({(Path.vertex(a[0].source), Path.vertex(a[0].target)): 1})
    terms = [
        ((Path.vertex(a[0].source), _sub(a[1:])), 1),
        ((_sub(a[:-1]), Path.vertex(a[-1].target)), 1),
    ]
    for i in range(1, n - 1):
        terms.append(((_sub(a[:i]), _sub(a[i + 1 :])), 1))
    return PathTensor(terms)


def path_coproduct_lin(v: PathLinComb) -> PathTensor:
    terms = []
    for p, c in v.items():
        for key, d in path_coproduct(p).items():
            terms.append((key, c * d))
    return PathTensor(terms)


def path_dot_left(u: PathLinComb, t: PathTensor) -> PathTensor:
    """``u.(b (x) c) = ub (x) c``."""
    terms = []
    for p, a in u.items():
        for (b, c), d in t.items():
            if p.target == b.source:
                terms.append(((_concat(p, b), c), a * d))
    return PathTensor(terms)


def path_dot_right(t: PathTensor, u: PathLinComb) -> PathTensor:
    """``(b (x) c).u = b (x) cu``."""
    terms = []
    for (b, c), d in t.items():
        for p, a in u.items():
            if c.target == p.source:
                terms.append(((b, _concat(c, p)), d * a))
    return PathTensor(terms)


def path_coassoc_defect(p: Path) -> PathTensor:
    """``(Delta (x) id) Delta(p) - (id (x) Delta) Delta(p)`` in the tensor cube."""
    left, right = [], []
    for (u, w), c in path_coproduct(p).items():
        for (a, b), d in path_coproduct(u).items():
            left.append(((a, b, w), c * d))
        for (a, b), d in path_coproduct(w).items():
            right.append(((u, a, b), c * d))
    return PathTensor(left) - PathTensor(right)


def path_leibniz_defect(p: Path, q: Path) -> PathTensor:
    """``Delta(pq) - p.Delta(q) - Delta(p).q`` (weight zero)."""
    P, Q = PathLinComb({p: 1}), PathLinComb({q: 1})
    lhs = path_coproduct_lin(path_mul(p, q))
    return lhs - path_dot_left(P, path_coproduct(q)) - path_dot_right(path_coproduct(p), Q)
