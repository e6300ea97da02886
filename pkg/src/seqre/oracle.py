"""Independent membership oracle via Brzozowski derivatives.

Shares nothing with the proof kernel beyond the Regex type, so agreement
between the two routes is meaningful evidence rather than a tautology.
"""

from __future__ import annotations

from .syntax import Atom, Concat, Empty, Epsilon, Regex, Star, Union, EMPTY, EPSILON


def nullable(r: Regex) -> bool:
    """True iff the language of r contains the empty word."""
    if isinstance(r, (Empty, Atom)):
        return False
    if isinstance(r, (Epsilon, Star)):
        return True
    if isinstance(r, Concat):
        return nullable(r.left) and nullable(r.right)
    if isinstance(r, Union):
        return nullable(r.left) or nullable(r.right)
    raise TypeError(f"not a Regex: {r!r}")


# Smart constructors applying only the unit/absorption laws for the empty
# language and the empty word; no other canonicalization.
def _union(left: Regex, right: Regex) -> Regex:
    if isinstance(left, Empty):
        return right
    if isinstance(right, Empty):
        return left
    return Union(left, right)


def _concat(left: Regex, right: Regex) -> Regex:
    if isinstance(left, Empty) or isinstance(right, Empty):
        return EMPTY
    if isinstance(left, Epsilon):
        return right
    if isinstance(right, Epsilon):
        return left
    return Concat(left, right)


def derivative(r: Regex, c: str) -> Regex:
    """The derivative of r by symbol c: denotes { v | cv in L(r) }."""
    if isinstance(r, (Empty, Epsilon)):
        return EMPTY
    if isinstance(r, Atom):
        return EPSILON if r.ch == c else EMPTY
    if isinstance(r, Concat):
        head = _concat(derivative(r.left, c), r.right)
        if nullable(r.left):
            return _union(head, derivative(r.right, c))
        return head
    if isinstance(r, Union):
        return _union(derivative(r.left, c), derivative(r.right, c))
    if isinstance(r, Star):
        return _concat(derivative(r.inner, c), r)
    raise TypeError(f"not a Regex: {r!r}")


def oracle_match(r: Regex, w: str) -> bool:
    """Membership by folding derivative over the word, then nullable."""
    cur = r
    for ch in w:
        cur = derivative(cur, ch)
        if isinstance(cur, Empty):
            return False
    return nullable(cur)
