"""Exhaustive and random generation of regexes and words for testing."""

from __future__ import annotations

import itertools
import random

from .syntax import Atom, Concat, Empty, Epsilon, Regex, Star, Union, EMPTY, EPSILON, degree, render


def words_upto(alphabet: str, max_len: int) -> list[str]:
    """All words over the alphabet up to max_len, shortest first, then lex."""
    symbols = sorted(set(alphabet))
    out: list[str] = []
    for length in range(max_len + 1):
        out.extend("".join(t) for t in itertools.product(symbols, repeat=length))
    return out


def regexes_by_degree(alphabet: str, max_degree: int) -> list[list[Regex]]:
    """Bucket d holds every AST of degree exactly d over the alphabet."""
    symbols = sorted(set(alphabet))
    buckets: list[list[Regex]] = [[EMPTY]]
    for d in range(1, max_degree + 1):
        bucket: list[Regex] = []
        if d == 1:
            bucket.append(EPSILON)
            bucket.extend(Atom(c) for c in symbols)
        for left_deg in range(d):
            right_deg = d - 1 - left_deg
            for left in buckets[left_deg]:
                for right in buckets[right_deg]:
                    bucket.append(Concat(left, right))
                    bucket.append(Union(left, right))
        bucket.extend(Star(r) for r in buckets[d - 1])
        buckets.append(bucket)
    return buckets


def regexes_upto(alphabet: str, max_degree: int) -> list[Regex]:
    """Every regex of degree <= max_degree, ordered by degree then by its
    rendered text, so enumerations are stable across runs."""
    out: list[Regex] = []
    for bucket in regexes_by_degree(alphabet, max_degree):
        out.extend(sorted(bucket, key=render))
    return out


def random_regex(rng: random.Random, alphabet: str, max_degree: int) -> Regex:
    """Draw a regex of degree <= max_degree; the empty language is rare."""
    symbols = sorted(set(alphabet))
    leaves: list[Regex] = [Atom(c) for c in symbols] * 3 + [EPSILON, EMPTY]

    def go(budget: int) -> Regex:
        if budget <= 1:
            return rng.choice(leaves)
        roll = rng.random()
        if roll < 0.15:
            return rng.choice(leaves)
        if roll < 0.45 or budget < 3:
            return Star(go(budget - 1))
        left_budget = rng.randint(1, budget - 2)
        left = go(left_budget)
        right = go(budget - 1 - left_budget)
        return Concat(left, right) if roll < 0.75 else Union(left, right)

    return go(rng.randint(1, max_degree))


def sample_member(
    rng: random.Random, r: Regex, max_len: int | None = None, tries: int = 32
) -> str | None:
    """Draw a word from the language of r, or None if none fits."""

    def go(node: Regex) -> str | None:
        if isinstance(node, Empty):
            return None
        if isinstance(node, Epsilon):
            return ""
        if isinstance(node, Atom):
            return node.ch
        if isinstance(node, Concat):
            left = go(node.left)
            if left is None:
                return None
            right = go(node.right)
            return None if right is None else left + right
        if isinstance(node, Union):
            first, second = (node.left, node.right) if rng.random() < 0.5 else (node.right, node.left)
            w = go(first)
            return go(second) if w is None else w
        if isinstance(node, Star):
            reps = rng.choice((0, 0, 1, 1, 2, 3))
            parts = []
            for _ in range(reps):
                w = go(node.inner)
                if w is None:
                    break
                parts.append(w)
            return "".join(parts)
        raise TypeError(f"not a Regex: {node!r}")

    for _ in range(tries):
        w = go(r)
        if w is not None and (max_len is None or len(w) <= max_len):
            return w
    return None


def random_true_instance(
    rng: random.Random, alphabet: str, max_degree: int, max_word_len: int
) -> tuple[Regex, str]:
    """A (regex, member word) pair; resamples until the word fits."""
    while True:
        r = random_regex(rng, alphabet, max_degree)
        w = sample_member(rng, r, max_word_len)
        if w is not None:
            return r, w
