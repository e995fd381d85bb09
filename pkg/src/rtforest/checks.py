"""Exhaustive verification of the bialgebra laws over enumerated forests.

Each check returns a :class:`CheckReport`; enumeration order is fixed, so
reports (including the first counterexample) are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import coalgebra
from .coalgebra import cocycle_defect, coassoc_defect, dotword_coproduct_closed, leibniz_defect
from .forest import Alphabets, dot_word, enumerate_forests, forests_up_to, is_valid, render
from .prelie import prelie_defect
from .quiver import Quiver, path_coassoc_defect, path_coproduct_lin, path_leibniz_defect

__all__ = [
    "CheckReport",
    "check_closure",
    "check_coassoc",
    "check_cocycle",
    "check_dotwords",
    "check_leibniz",
    "check_prelie",
    "check_quiver",
    "LAWS",
]


@dataclass
class CheckReport:
    law: str
    unit: str
    checked: int = 0
    defects: int = 0
    witness: str | None = None
    defect: str | None = None

    @property
    def ok(self) -> bool:
        return self.defects == 0

    def record(self, witness: str, defect) -> None:
        self.defects += 1
        if self.witness is None:
            self.witness = witness
            self.defect = str(defect)

    def summary(self) -> str:
        if self.ok:
            return f"OK: 0 defects over {self.checked} {self.unit}"
        return (
            f"FAIL: {self.defects} defects over {self.checked} {self.unit}\n"
            f"counterexample: {self.witness}\n"
            f"defect: {self.defect}"
        )


def check_coassoc(max_vertices: int, alphabets: Alphabets) -> CheckReport:
    report = CheckReport("coassoc", "forests")
    for f in forests_up_to(max_vertices, alphabets):
        report.checked += 1
        d = coassoc_defect(f)
        if d:
            report.record(render(f), d)
    return report


def check_closure(max_vertices: int, alphabets: Alphabets) -> CheckReport:
    """Every forest in every coproduct is valid over the same alphabets."""
    report = CheckReport("closure", "forests")
    for f in forests_up_to(max_vertices, alphabets):
        report.checked += 1
        for (u, w), _ in coalgebra.coproduct(f).items():
            if not (is_valid(u, alphabets) and is_valid(w, alphabets)):
                report.record(render(f), f"{render(u)} ⊗ {render(w)}")
                break
    return report


def check_leibniz(max_vertices: int, alphabets: Alphabets) -> CheckReport:
    """All ordered pairs with total vertex count at most ``max_vertices``."""
    report = CheckReport("leibniz", "pairs")
    by_size = [enumerate_forests(n, alphabets) for n in range(max_vertices + 1)]
    for n1 in range(max_vertices + 1):
        for n2 in range(max_vertices + 1 - n1):
            for f in by_size[n1]:
                for g in by_size[n2]:
                    report.checked += 1
                    d = leibniz_defect(f, g)
                    if d:
                        report.record(f"({render(f)}, {render(g)})", d)
    return report


def check_cocycle(max_vertices: int, alphabets: Alphabets) -> CheckReport:
    report = CheckReport("cocycle", "pairs")
    for f in forests_up_to(max_vertices, alphabets):
        for omega in alphabets.Omega:
            report.checked += 1
            d = cocycle_defect(omega, f)
            if d:
                report.record(f"({omega}, {render(f)})", d)
    return report


def check_dotwords(max_length: int, alphabets: Alphabets) -> CheckReport:
    """Closed form against the recursive coproduct on every generator word."""
    report = CheckReport("dotwords", "words")
    for m in range(1, max_length + 1):
        for word in itertools.product(alphabets.X, repeat=m):
            report.checked += 1
            f = dot_word(word)
            if coalgebra.coproduct(f) != dotword_coproduct_closed(word):
                report.record(render(f), coalgebra.coproduct(f) - dotword_coproduct_closed(word))
    return report


def check_prelie(
    max_vertices: int,
    alphabets: Alphabets,
    *,
    samples: int = 0,
    sample_vertices: int | None = None,
    seed: int = 0,
) -> CheckReport:
    """All triples of forests with at most ``max_vertices`` vertices each.

    ``samples`` extra triples are drawn with a seeded RNG from forests with
    at most ``sample_vertices`` vertices.
    """
    report = CheckReport("prelie", "triples")
    basis = forests_up_to(max_vertices, alphabets)
    for a, b, c in itertools.product(basis, repeat=3):
        report.checked += 1
        d = prelie_defect(a, b, c)
        if d:
            report.record(f"({render(a)}, {render(b)}, {render(c)})", d)
    if samples:
        pool = forests_up_to(sample_vertices if sample_vertices is not None else max_vertices, alphabets)
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = (rng.choice(pool) for _ in range(3))
            report.checked += 1
            d = prelie_defect(a, b, c)
            if d:
                report.record(f"({render(a)}, {render(b)}, {render(c)})", d)
    return report


def check_quiver(quiver: Quiver, max_length: int) -> list[CheckReport]:
    paths = quiver.paths(max_length)
    leib = CheckReport("quiver-leibniz", "pairs")
    for p in paths:
        for q in paths:
            leib.checked += 1
            d = path_leibniz_defect(p, q)
            if d:
                leib.record(f"({p}, {q})", d)
    coass = CheckReport("quiver-coassoc", "paths")
    for p in paths:
        coass.checked += 1
        d = path_coassoc_defect(p)
        if d:
            coass.record(str(p), d)
    unit = CheckReport("quiver-unit", "units")
    unit.checked = 1
    d = path_coproduct_lin(quiver.unit())
    if d:
        unit.record("sum of vertices", d)
    return [leib, coass, unit]


LAWS = {
    "coassoc": check_coassoc,
    "leibniz": check_leibniz,
    "cocycle": check_cocycle,
    "prelie": check_prelie,
    "closure": check_closure,
}
