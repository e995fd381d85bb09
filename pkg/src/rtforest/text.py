"""Forest expression language: parser, canonical serializer and JSON forms.

Grammar::

    Forest := "()" | Tree (WS Tree)*
    Tree   := NAME | NAME "[" Forest? "]"

Linear combinations are sums of ``coeff·(body)`` terms, e.g.
``-λ·(a[x] ⊗ ()) + 1·(x ⊗ a[x])``.  A coefficient is an integer, a
monomial in the weight (``λ``, ``3λ^2``; ``lambda`` is accepted too) or
any parenthesised polynomial.  The coefficient and its ``·``/``*`` may be
omitted, and so may the parentheses around a one-forest body.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .forest import EMPTY, RESERVED_NAMES, Alphabets, Forest, Tree, render
from .lambda_ring import LambdaPoly
from .linear import LinComb, Tensor2, Tensor3, _Sparse

__all__ = [
    "ParseError",
    "SessionConfig",
    "lincomb_from_json",
    "lincomb_to_json",
    "parse_forest",
    "parse_lincomb",
    "parse_poly",
    "parse_tensor",
    "serialize_forest",
    "serialize_lincomb",
    "serialize_specialized",
    "serialize_tensor",
    "tensor_from_json",
    "tensor_to_json",
]


class ParseError(ValueError):
    """Syntax or validity error in an expression.

    ``offset`` is a byte offset into the UTF-8 encoding of the input,
    ``position`` the corresponding character index, ``rule`` names the
    grammar rule that failed.
    """

    def __init__(self, message: str, text: str, position: int, rule: str):
        self.message = message
        self.text = text
        self.position = position
        self.offset = len(text[:position].encode("utf-8"))
        self.rule = rule
        super().__init__(f"{rule} at byte {self.offset}: {message}")


@dataclass(frozen=True)
class SessionConfig:
    alphabets: Alphabets
    mode: str = "unicode"

    def __post_init__(self):
        if self.mode not in ("unicode", "ascii"):
            raise ValueError(f"output mode must be 'unicode' or 'ascii', not {self.mode!r}")

    @property
    def ascii(self) -> bool:
        return self.mode == "ascii"

    @property
    def weight_symbol(self) -> str:
        return "lambda" if self.ascii else "λ"

    @property
    def times(self) -> str:
        return "*" if self.ascii else "·"

    @property
    def tensor_sep(self) -> str:
        return "(x)" if self.ascii else "⊗"


def _config(cfg: SessionConfig | Alphabets) -> SessionConfig:
    return cfg if isinstance(cfg, SessionConfig) else SessionConfig(cfg)


def _name_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _name_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


class _Parser:
    def __init__(self, text: str, alphabets: Alphabets | None = None):
        self.text = text
        self.pos = 0
        self.alphabets = alphabets

    def error(self, message: str, rule: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos, rule)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def at_empty_forest(self) -> bool:
        if not self.at("("):
            return False
        j = self.pos + 1
        while j < len(self.text) and self.text[j].isspace():
            j += 1
        return j < len(self.text) and self.text[j] == ")"

    def expect_end(self) -> None:
        self.skip_ws()
        if self.pos < len(self.text):
            ch = self.peek()
            if ch == "]":
                raise self.error("unmatched ']'", "unbalanced-brackets")
            raise self.error(f"unexpected {ch!r}", "trailing-input")

    # forests

    def name(self) -> str:
        start = self.pos
        if not _name_start(self.peek()):
            raise self.error(f"expected a decoration name, found {self.peek() or 'end of input'!r}", "name")
        while self.pos < len(self.text) and _name_char(self.text[self.pos]):
            self.pos += 1
        return self.text[start : self.pos]

    def forest(self) -> Forest:
        self.skip_ws()
        if self.at_empty_forest():
            self.pos = self.text.index(")", self.pos) + 1
            return EMPTY
        if not _name_start(self.peek()):
            if self.peek() == "]":
                raise self.error("unmatched ']'", "unbalanced-brackets")
            if self.peek() == "(":
                raise self.error("'(' must be followed by ')' to denote the empty forest", "forest")
            raise self.error(f"expected a forest, found {self.peek() or 'end of input'!r}", "forest")
        trees = [self.tree()]
        while True:
            save = self.pos
            self.skip_ws()
            if _name_start(self.peek()) and not self._at_reserved():
                trees.append(self.tree())
            else:
                self.pos = save
                return Forest(trees)

    def _at_reserved(self) -> bool:
        j = self.pos
        while j < len(self.text) and _name_char(self.text[j]):
            j += 1
        return self.text[self.pos : j] in RESERVED_NAMES

    def tree(self) -> Tree:
        start = self.pos
        label = self.name()
        if label in RESERVED_NAMES:
            raise self.error(f"{label!r} is reserved for the weight", "name", start)
        a = self.alphabets
        if a is not None and label not in a:
            raise self.error(f"undeclared decoration {label!r}", "undeclared-name", start)
        generator = a is not None and label in a.X
        if not self.at("["):
            return Tree(label) if generator else Tree(label, EMPTY)
        bracket = self.pos
        if generator:
            raise self.error(
                f"{label!r} is in X; internal vertices are decorated by Omega only", "generator-internal", start
            )
        self.pos += 1
        self.skip_ws()
        if self.at("]"):
            self.pos += 1
            return Tree(label, EMPTY)
        if self.pos >= len(self.text):
            raise self.error("unclosed '['", "unbalanced-brackets", bracket)
        children = self.forest()
        self.skip_ws()
        if not self.at("]"):
            if self.pos >= len(self.text):
                raise self.error("unclosed '['", "unbalanced-brackets", bracket)
            raise self.error(f"expected ']', found {self.peek()!r}", "unbalanced-brackets")
        self.pos += 1
        return Tree(label, children)

    # coefficients

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer", "integer")
        return int(self.text[start : self.pos])

    def weight_symbol(self) -> bool:
        for sym in ("λ", "lambda"):
            if self.at(sym):
                end = self.pos + len(sym)
                if end < len(self.text) and _name_char(self.text[end]):
                    continue
                self.pos = end
                return True
        return False

    def monomial(self) -> LambdaPoly:
        self.skip_ws()
        coeff = 1
        has_int = self.peek().isdigit()
        if has_int:
            coeff = self.integer()
            save = self.pos
            self.skip_ws()
            if self.peek() in ("*", "·"):
                self.pos += 1
                self.skip_ws()
                if not self.at("λ") and not self.at("lambda"):
                    self.pos = save
                    return LambdaPoly({0: coeff})
        if not self.weight_symbol():
            if has_int:
                return LambdaPoly({0: coeff})
            raise self.error("expected an integer or the weight symbol", "coefficient")
        exp = 1
        save = self.pos
        self.skip_ws()
        if self.at("^"):
            self.pos += 1
            self.skip_ws()
            exp = self.integer()
        else:
            self.pos = save
        return LambdaPoly({exp: coeff})

    def poly(self) -> LambdaPoly:
        self.skip_ws()
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        total = sign * self.monomial()
        while True:
            save = self.pos
            self.skip_ws()
            if self.peek() and self.peek() in "+-":
                sign = -1 if self.peek() == "-" else 1
                self.pos += 1
                total = total + sign * self.monomial()
            else:
                self.pos = save
                return total

    def coefficient(self) -> LambdaPoly | None:
        """A coefficient followed by a multiplication sign, or None (position restored)."""
        self.skip_ws()
        save = self.pos
        try:
            if self.at("("):
                self.pos += 1
                p = self.poly()
                self.skip_ws()
                if not self.at(")"):
                    raise self.error("expected ')'", "coefficient")
                self.pos += 1
            else:
                p = self.monomial()
        except ParseError:
            self.pos = save
            return None
        self.skip_ws()
        if self.peek() in ("*", "·") and self.peek():
            self.pos += 1
            return p
        self.pos = save
        return None

    # linear combinations

    def body(self, arity: int) -> tuple[Forest, ...]:
        self.skip_ws()
        if arity == 1 and not self.at("(") or arity == 1 and self.at_empty_forest():
            return (self.forest(),)
        if not self.at("("):
            raise self.error("expected '(' opening a tensor term", "term")
        open_pos = self.pos
        self.pos += 1
        parts = [self.forest()]
        for _ in range(arity - 1):
            self.skip_ws()
            for s in ("⊗", "(x)"):
                if self.at(s):
                    self.pos += len(s)
                    break
            else:
                raise self.error("expected a tensor separator '⊗' or '(x)'", "tensor")
            parts.append(self.forest())
        self.skip_ws()
        if not self.at(")"):
            if self.pos >= len(self.text):
                raise self.error("unclosed '('", "unbalanced-brackets", open_pos)
            raise self.error(f"expected ')', found {self.peek()!r}", "term")
        self.pos += 1
        return tuple(parts)

    def term(self, arity: int) -> tuple[tuple[Forest, ...], LambdaPoly]:
        coeff = self.coefficient()
        parts = self.body(arity)
        return parts, coeff if coeff is not None else LambdaPoly(1)

    def combination(self, arity: int) -> list[tuple[tuple[Forest, ...], LambdaPoly]]:
        self.skip_ws()
        if self.text.strip() == "0":
            self.pos = len(self.text)
            return []
        sign = 1
        if self.peek() and self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        out = []
        parts, c = self.term(arity)
        out.append((parts, sign * c))
        while True:
            self.skip_ws()
            if self.pos >= len(self.text):
                return out
            if self.peek() not in "+-":
                if self.peek() == "]":
                    raise self.error("unmatched ']'", "unbalanced-brackets")
                raise self.error(f"expected '+' or '-', found {self.peek()!r}", "combination")
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            parts, c = self.term(arity)
            out.append((parts, sign * c))


def parse_forest(text: str, cfg: SessionConfig | Alphabets) -> Forest:
    """Parse a forest, enforcing the declared alphabets.

    ``d`` and ``d[]`` denote the same one-vertex tree for an operator name ``d``.
    """
    p = _Parser(text, _config(cfg).alphabets)
    p.skip_ws()
    if p.pos >= len(text):
        raise p.error("empty input; write '()' for the empty forest", "forest")
    f = p.forest()
    p.expect_end()
    return f


def parse_poly(text: str) -> LambdaPoly:
    p = _Parser(text)
    p.skip_ws()
    if p.pos >= len(text):
        raise p.error("empty polynomial", "coefficient")
    value = p.poly()
    p.expect_end()
    return value


def parse_lincomb(text: str, cfg: SessionConfig | Alphabets) -> LinComb:
    p = _Parser(text, _config(cfg).alphabets)
    terms = p.combination(1)
    p.expect_end()
    return LinComb((parts[0], c) for parts, c in terms)


def parse_tensor(text: str, cfg: SessionConfig | Alphabets, arity: int = 2) -> Tensor2 | Tensor3:
    if arity not in (2, 3):
        raise ValueError("tensor arity must be 2 or 3")
    p = _Parser(text, _config(cfg).alphabets)
    terms = p.combination(arity)
    p.expect_end()
    cls = Tensor2 if arity == 2 else Tensor3
    return cls((parts, c) for parts, c in terms)


# serialization


def serialize_forest(f: Forest | Tree, cfg: SessionConfig | Alphabets | None = None) -> str:
    if isinstance(f, Tree):
        f = Forest((f,))
    return render(f)


def _poly_coeff(p: LambdaPoly, cfg: SessionConfig) -> tuple[bool, str]:
    negative = p[p.degree] < 0
    mag = -p if negative else p
    text = mag.to_text(cfg.weight_symbol)
    if len(mag.coeffs) > 1:
        text = f"({text})"
    return negative, text


def _fraction_coeff(v: Fraction, cfg: SessionConfig) -> tuple[bool, str]:
    v = Fraction(v)
    return v < 0, str(abs(v))


def _join_terms(items: Iterable, coeff_fn: Callable, cfg: SessionConfig) -> str:
    sep = f" {cfg.tensor_sep} "
    out = []
    for key, c in items:
        negative, ctext = coeff_fn(c, cfg)
        body = render(key) if isinstance(key, Forest) else sep.join(render(f) for f in key)
        term = f"{ctext}{cfg.times}({body})"
        if not out:
            out.append(("-" if negative else "") + term)
        else:
            out.append((" - " if negative else " + ") + term)
    return "".join(out) if out else "0"


def _default_cfg(cfg) -> SessionConfig:
    if cfg is None:
        return SessionConfig(Alphabets((), ()))
    return _config(cfg)


def serialize_lincomb(v: LinComb, cfg: SessionConfig | Alphabets | None = None) -> str:
    return _join_terms(v.sorted_items(), _poly_coeff, _default_cfg(cfg))


def serialize_tensor(t: Tensor2 | Tensor3, cfg: SessionConfig | Alphabets | None = None) -> str:
    return _join_terms(t.sorted_items(), _poly_coeff, _default_cfg(cfg))


def serialize_specialized(v: _Sparse, value, cfg: SessionConfig | Alphabets | None = None) -> str:
    """Render with the weight set to the rational ``value``."""
    terms = v.specialize(value)
    items = sorted(terms.items(), key=lambda kc: v.sort_key(kc[0]))
    return _join_terms(items, _fraction_coeff, _default_cfg(cfg))


# JSON forms


def lincomb_to_json(v: LinComb) -> list[dict]:
    return [{"forest": render(f), "coeff": p.to_json()} for f, p in v.sorted_items()]


def tensor_to_json(t: Tensor2 | Tensor3) -> list[dict]:
    return [{"forests": [render(f) for f in key], "coeff": p.to_json()} for key, p in t.sorted_items()]


def specialized_to_json(v: _Sparse, value) -> list[dict]:
    """JSON of a specialization; coefficients are rational strings such as ``"-1/2"``."""
    items = sorted(v.specialize(value).items(), key=lambda kc: v.sort_key(kc[0]))
    if isinstance(v, LinComb):
        return [{"forest": render(f), "coeff": str(c)} for f, c in items]
    return [{"forests": [render(f) for f in key], "coeff": str(c)} for key, c in items]


def _load(data):
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list):
        raise ValueError("expected a JSON array of terms")
    return data


def lincomb_from_json(data, cfg: SessionConfig | Alphabets) -> LinComb:
    terms = []
    for item in _load(data):
        if not isinstance(item, dict) or set(item) != {"forest", "coeff"}:
            raise ValueError(f"malformed term {item!r}")
        terms.append((parse_forest(item["forest"], cfg), LambdaPoly.from_json(item["coeff"])))
    return LinComb(terms)


def tensor_from_json(data, cfg: SessionConfig | Alphabets) -> Tensor2 | Tensor3:
    terms = []
    arity = None
    for item in _load(data):
        if not isinstance(item, dict) or set(item) != {"forests", "coeff"}:
            raise ValueError(f"malformed term {item!r}")
        key = tuple(parse_forest(s, cfg) for s in item["forests"])
        if arity is None:
            arity = len(key)
        if len(key) != arity or arity not in (2, 3):
            raise ValueError("tensor terms must all have 2 or all have 3 forests")
        terms.append((key, LambdaPoly.from_json(item["coeff"])))
    cls = Tensor3 if arity == 3 else Tensor2
    return cls(terms)
