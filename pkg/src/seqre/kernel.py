"""Sequents, derivation trees, the ten inference rules, and the checker.

A sequent ``r1, ..., rn ⊢ w`` asserts that the word w belongs to the
concatenation of the languages of r1 through rn.  Derivability is defined
by two axioms and eight inference rules.  Writing Γ for an untouched
prefix of the antecedent (left rules may act at any index) and Δ for the
rest, the rules are:

    Axiom1:              a ⊢ a            (single symbol)
    Axiom2:                ⊢ ε            (empty antecedent, empty word)
    DotL:    Γ, ρ, Ψ, Δ ⊢ w   =>   Γ, ρ·Ψ, Δ ⊢ w
    DotR:    Δ1 ⊢ w1  and  Δ2 ⊢ w2   =>   Δ1, Δ2 ⊢ w1w2
    EpsL:    Γ, Δ ⊢ w         =>   Γ, ε, Δ ⊢ w
    WL:      Γ, Δ ⊢ w         =>   Γ, ρ*, Δ ⊢ w
    DL:      Γ, ρ, Δ ⊢ w      =>   Γ, ρ*, Δ ⊢ w
    CL:      Γ, ρ*, ρ*, Δ ⊢ w =>   Γ, ρ*, Δ ⊢ w
    PlusL1:  Γ, ρ, Δ ⊢ w      =>   Γ, ρ+Ψ, Δ ⊢ w
    PlusL2:  Γ, Ψ, Δ ⊢ w      =>   Γ, ρ+Ψ, Δ ⊢ w

WL discards a starred expression, DL uses its body exactly once, CL
duplicates it; together they give star its zero/one/many readings.  The
empty-language constant has no rule, so any sequent whose antecedent
contains it is underivable.

The checker validates a derivation tree one node at a time, so it accepts
hand-written proofs as well as search output.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .syntax import Atom, Concat, Epsilon, Regex, Star, Union, parse, render


class RuleName(Enum):
    AXIOM1 = "Axiom1"
    AXIOM2 = "Axiom2"
    DOT_L = "DotL"
    DOT_R = "DotR"
    EPS_L = "EpsL"
    CL = "CL"
    WL = "WL"
    DL = "DL"
    PLUS_L1 = "PlusL1"
    PLUS_L2 = "PlusL2"


_RULE_BY_NAME = {rule.value: rule for rule in RuleName}

_PREMISE_COUNT = {
    RuleName.AXIOM1: 0,
    RuleName.AXIOM2: 0,
    RuleName.DOT_R: 2,
    RuleName.DOT_L: 1,
    RuleName.EPS_L: 1,
    RuleName.CL: 1,
    RuleName.WL: 1,
    RuleName.DL: 1,
    RuleName.PLUS_L1: 1,
    RuleName.PLUS_L2: 1,
}


@dataclass(frozen=True)
class Sequent:
    """An ordered antecedent of regexes and a word consequent."""

    antecedent: tuple[Regex, ...]
    consequent: str

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))


@dataclass(frozen=True)
class Derivation:
    """One node of a derivation tree.

    ``position`` is the antecedent index a left rule acts at, the pair
    (antecedent index, word index) for DotR, and None for axioms.  The
    constructor does not validate rule shapes; that is the checker's job.
    """

    rule: RuleName
    conclusion: Sequent
    premises: tuple["Derivation", ...] = ()
    position: int | tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))
        if isinstance(self.position, list):
            object.__setattr__(self, "position", tuple(self.position))


def conclusion_of(root: Derivation) -> Sequent:
    """The sequent a derivation claims to prove."""
    return root.conclusion


def format_sequent(s: Sequent) -> str:
    return f"{', '.join(render(r) for r in s.antecedent)} ⊢ {s.consequent}"


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def step_error(node: Derivation) -> str | None:
    """Why this node is not a correct single rule application, or None.

    Only the node's own rule, position, conclusion, and its premises'
    conclusion sequents are consulted; subtrees below the premises do not
    matter here.
    """
    rule = node.rule
    ants = node.conclusion.antecedent
    w = node.conclusion.consequent

    expected = _PREMISE_COUNT[rule]
    if len(node.premises) != expected:
        return f"{rule.value} needs {expected} premise(s), found {len(node.premises)}"

    if rule is RuleName.AXIOM1:
        if node.position is not None:
            return "axioms carry no position"
        if len(ants) == 1 and isinstance(ants[0], Atom) and w == ants[0].ch:
            return None
        return "Axiom1 concludes exactly 'a ⊢ a' for a single symbol a"

    if rule is RuleName.AXIOM2:
        if node.position is not None:
            return "axioms carry no position"
        if ants == () and w == "":
            return None
        return "Axiom2 concludes the empty sequent '⊢ ε'"

    if rule is RuleName.DOT_R:
        pos = node.position
        if not (isinstance(pos, tuple) and len(pos) == 2 and all(_is_int(p) for p in pos)):
            return "DotR position must be a pair (antecedent index, word index)"
        i, j = pos
        if not (0 <= i <= len(ants)) or not (0 <= j <= len(w)):
            return f"DotR split {pos} out of bounds"
        left, right = node.premises[0].conclusion, node.premises[1].conclusion
        if left.antecedent != ants[:i] or left.consequent != w[:j]:
            return "DotR left premise does not match the split"
        if right.antecedent != ants[i:] or right.consequent != w[j:]:
            return "DotR right premise does not match the split"
        return None

    # Left rules: one premise, consequent preserved, one antecedent slot
    # rewritten at the stated index.
    pos = node.position
    if not _is_int(pos):
        return f"{rule.value} position must be an antecedent index"
    if not (0 <= pos < len(ants)):
        return f"{rule.value} position {pos} out of bounds"
    target = ants[pos]
    premise = node.premises[0].conclusion
    if premise.consequent != w:
        return f"{rule.value} must preserve the consequent"

    if rule is RuleName.EPS_L:
        if not isinstance(target, Epsilon):
            return f"EpsL requires the empty-word constant at position {pos}"
        replacement: tuple[Regex, ...] = ()
    elif rule is RuleName.DOT_L:
        if not isinstance(target, Concat):
            return f"DotL requires a concatenation at position {pos}"
        replacement = (target.left, target.right)
    elif rule is RuleName.PLUS_L1:
        if not isinstance(target, Union):
            return f"PlusL1 requires a union at position {pos}"
        replacement = (target.left,)
    elif rule is RuleName.PLUS_L2:
        if not isinstance(target, Union):
            return f"PlusL2 requires a union at position {pos}"
        replacement = (target.right,)
    elif rule is RuleName.WL:
        if not isinstance(target, Star):
            return f"WL requires a starred expression at position {pos}"
        replacement = ()
    elif rule is RuleName.DL:
        if not isinstance(target, Star):
            return f"DL requires a starred expression at position {pos}"
        replacement = (target.inner,)
    elif rule is RuleName.CL:
        if not isinstance(target, Star):
            return f"CL requires a starred expression at position {pos}"
        replacement = (target, target)
    else:  # pragma: no cover - exhaustive over RuleName
        return f"unknown rule {rule!r}"

    if premise.antecedent != ants[:pos] + replacement + ants[pos + 1 :]:
        return f"{rule.value} premise antecedent does not match the rule shape"
    return None


def check_step(node: Derivation) -> bool:
    """True iff the node is a correct single application of its rule."""
    return step_error(node) is None


@dataclass(frozen=True)
class CheckFailure:
    """Location (premise indices from the root) and reason of a bad node."""

    path: tuple[int, ...]
    reason: str


def find_failure(root: Derivation) -> CheckFailure | None:
    """First invalid node in pre-order, or None if the tree is a proof."""
    stack: list[tuple[Derivation, tuple[int, ...]]] = [(root, ())]
    while stack:
        node, path = stack.pop()
        reason = step_error(node)
        if reason is not None:
            return CheckFailure(path, reason)
        for i in range(len(node.premises) - 1, -1, -1):
            stack.append((node.premises[i], path + (i,)))
    return None


def check_derivation(root: Derivation) -> bool:
    """True iff every node checks and (hence) every leaf is an axiom."""
    return find_failure(root) is None


def iter_nodes(root: Derivation) -> Iterator[Derivation]:
    """Pre-order traversal of a derivation tree."""
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.premises))


class SchemaError(ValueError):
    """Raised when a JSON document does not encode a derivation."""


def derivation_to_json(node: Derivation) -> dict:
    """Encode a derivation in the interchange schema.

    Schema: ``{"rule": <name>, "sequent": {"antecedent": [<regex text>...],
    "consequent": <word>}, "position": <int | [int, int]>, "premises":
    [...]}`` where "position" is omitted on axiom nodes.
    """
    doc: dict = {
        "rule": node.rule.value,
        "sequent": {
            "antecedent": [render(r) for r in node.conclusion.antecedent],
            "consequent": node.conclusion.consequent,
        },
    }
    if node.position is not None:
        pos = node.position
        doc["position"] = list(pos) if isinstance(pos, tuple) else pos
    doc["premises"] = [derivation_to_json(p) for p in node.premises]
    return doc


def derivation_from_json(obj) -> Derivation:
    """Decode and strictly validate the interchange schema.

    Raises SchemaError on structural problems (wrong types, unknown rule
    names, unparseable regex text, misplaced position fields).  Rule-shape
    validity is left to the checker.
    """
    if not isinstance(obj, dict):
        raise SchemaError(f"derivation node must be an object, got {type(obj).__name__}")
    extra = set(obj) - {"rule", "sequent", "position", "premises"}
    if extra:
        raise SchemaError(f"unknown field(s): {', '.join(sorted(extra))}")
    for field in ("rule", "sequent", "premises"):
        if field not in obj:
            raise SchemaError(f"missing field {field!r}")

    rule_name = obj["rule"]
    if not isinstance(rule_name, str) or rule_name not in _RULE_BY_NAME:
        raise SchemaError(f"unknown rule {rule_name!r}")
    rule = _RULE_BY_NAME[rule_name]

    seq = obj["sequent"]
    if not isinstance(seq, dict) or set(seq) != {"antecedent", "consequent"}:
        raise SchemaError("sequent must be an object with antecedent and consequent")
    raw_ants = seq["antecedent"]
    if not isinstance(raw_ants, list) or not all(isinstance(t, str) for t in raw_ants):
        raise SchemaError("antecedent must be a list of regex strings")
    try:
        ants = tuple(parse(t) for t in raw_ants)
    except ValueError as exc:
        raise SchemaError(f"bad antecedent regex: {exc}") from exc
    word = seq["consequent"]
    if not isinstance(word, str):
        raise SchemaError("consequent must be a string")

    is_axiom = rule in (RuleName.AXIOM1, RuleName.AXIOM2)
    pos = obj.get("position")
    if is_axiom:
        if "position" in obj:
            raise SchemaError("axiom nodes must omit position")
        position: int | tuple[int, int] | None = None
    elif rule is RuleName.DOT_R:
        if not (isinstance(pos, list) and len(pos) == 2 and all(_is_int(p) for p in pos)):
            raise SchemaError("DotR position must be a pair of integers")
        position = (pos[0], pos[1])
    else:
        if not _is_int(pos):
            raise SchemaError(f"{rule_name} position must be an integer")
        position = pos

    raw_premises = obj["premises"]
    if not isinstance(raw_premises, list):
        raise SchemaError("premises must be a list")
    premises = tuple(derivation_from_json(p) for p in raw_premises)

    return Derivation(rule, Sequent(ants, word), premises, position)
