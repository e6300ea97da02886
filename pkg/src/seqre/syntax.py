"""Regex abstract syntax, the concrete grammar, and the degree measure.

Concrete grammar (no whitespace allowed anywhere):

    expr   := term ('+' term)*
    term   := factor factor*
    factor := base '*'*
    base   := SYMBOL | '@' | '#' | '(' expr ')'
    SYMBOL := [a-zA-Z0-9]

'@' is the empty language, '#' is the empty word.  Juxtaposition is
concatenation.  Postfix '*' binds tightest, then concatenation, then '+';
both binary operators associate to the left.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable

ALPHABET = frozenset(string.ascii_letters + string.digits)


class ParseError(ValueError):
    """Raised on malformed regex text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Regex:
    """Base class for regex AST nodes. Instances are immutable."""


@dataclass(frozen=True)
class Empty(Regex):
    """The empty language."""


@dataclass(frozen=True)
class Epsilon(Regex):
    """The language containing only the empty word."""


@dataclass(frozen=True)
class Atom(Regex):
    """A single alphabet symbol."""

    ch: str

    def __post_init__(self):
        if len(self.ch) != 1 or self.ch not in ALPHABET:
            raise ValueError(f"atom must be one ASCII letter or digit, got {self.ch!r}")


@dataclass(frozen=True)
class Concat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Union(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex


EMPTY = Empty()
EPSILON = Epsilon()


def is_word(text: str) -> bool:
    """True iff every character of text is an allowed alphabet symbol."""
    return all(ch in ALPHABET for ch in text)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Regex:
        node = self._expr()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return node

    def _expr(self) -> Regex:
        node = self._term()
        while self._peek() == "+":
            self.pos += 1
            node = Union(node, self._term())
        return node

    def _term(self) -> Regex:
        node = self._factor()
        while True:
            ch = self._peek()
            if ch is None or not (ch in ALPHABET or ch in "@#("):
                return node
            node = Concat(node, self._factor())

    def _factor(self) -> Regex:
        node = self._base()
        while self._peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def _base(self) -> Regex:
        ch = self._peek()
        if ch is None:
            raise ParseError("unexpected end of input", self.pos)
        if ch == "(":
            self.pos += 1
            node = self._expr()
            if self._peek() != ")":
                raise ParseError("unbalanced parenthesis", self.pos)
            self.pos += 1
            return node
        if ch == "@":
            self.pos += 1
            return EMPTY
        if ch == "#":
            self.pos += 1
            return EPSILON
        if ch in ALPHABET:
            self.pos += 1
            return Atom(ch)
        raise ParseError(f"unexpected {ch!r}", self.pos)


def parse(text: str) -> Regex:
    """Parse regex text into an AST; raises ParseError on malformed input."""
    return _Parser(text).parse()


# Precedence levels used by the renderer: union 1, concat 2, star/leaf 3.
def _render(r: Regex) -> tuple[str, int]:
    if isinstance(r, Empty):
        return "@", 3
    if isinstance(r, Epsilon):
        return "#", 3
    if isinstance(r, Atom):
        return r.ch, 3
    if isinstance(r, Star):
        return _wrap(r.inner, 3) + "*", 3
    if isinstance(r, Concat):
        return _wrap(r.left, 2) + _wrap(r.right, 3), 2
    if isinstance(r, Union):
        return _wrap(r.left, 1) + "+" + _wrap(r.right, 2), 1
    raise TypeError(f"not a Regex: {r!r}")


def _wrap(r: Regex, min_prec: int) -> str:
    text, prec = _render(r)
    return f"({text})" if prec < min_prec else text


def render(r: Regex) -> str:
    """Emit canonical text with minimal parentheses; parse(render(r)) == r."""
    return _render(r)[0]


def degree(r: Regex) -> int:
    """Structural size measure: 0 for the empty language, additive elsewhere.

    The empty word counts 1 so that the measure strictly drops whenever a
    leading epsilon is discharged.
    """
    if isinstance(r, Empty):
        return 0
    if isinstance(r, (Epsilon, Atom)):
        return 1
    if isinstance(r, (Concat, Union)):
        return degree(r.left) + degree(r.right) + 1
    if isinstance(r, Star):
        return degree(r.inner) + 1
    raise TypeError(f"not a Regex: {r!r}")


def degree_seq(rs: Iterable[Regex]) -> int:
    """Sum of member degrees; the empty sequence has degree 0."""
    return sum(degree(r) for r in rs)
