"""Bottom-up proof search for sequents, producing checkable certificates.

Two strategies are provided.  ``search_lazy`` never enumerates how DotR
splits the word: the head of the antecedent consumes a prefix of the
input and hands the remaining position to the rest, backtracking over
consumption choices.  ``search_naive`` enumerates every applicable rule
instance (including every DotR split of both the antecedent and the word)
over the goal graph reachable under a budget, so it is complete relative
to that budget.  Both apply left rules only at the head of the antecedent
and both return a derivation that the checker accepts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .kernel import Derivation, RuleName, Sequent
from .syntax import Atom, Concat, Empty, Epsilon, Regex, Star, Union

DEFAULT_MAX_NODES = 10_000_000

_AXIOM2 = Derivation(RuleName.AXIOM2, Sequent((), ""))


@dataclass(frozen=True)
class SearchBudget:
    """Termination control for the exhaustive strategy.

    ``max_antecedent_len`` caps how long antecedents may grow (the only
    growing rules are CL and DotL); ``max_nodes`` is a safety valve on the
    number of distinct goals expanded.
    """

    max_antecedent_len: int
    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self):
        if self.max_antecedent_len < 1:
            raise ValueError("max_antecedent_len must be positive")
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be positive")


@dataclass(frozen=True)
class MatchOutcome:
    """Membership verdict plus certificate; ``exhausted`` marks the case
    where the exhaustive strategy ran out of node budget undecided."""

    derivable: bool
    certificate: Derivation | None = None
    exhausted: bool = False

    def __post_init__(self):
        if self.derivable != (self.certificate is not None):
            raise ValueError("certificate must be present exactly when derivable")
        if self.derivable and self.exhausted:
            raise ValueError("a derivable outcome cannot be exhausted")


def _width(r: Regex) -> int:
    # Most antecedent slots a single element can ever occupy at one time
    # while being decomposed by left rules (CL copies counted separately).
    if isinstance(r, (Empty, Epsilon, Atom)):
        return 1
    if isinstance(r, Concat):
        return _width(r.left) + _width(r.right)
    if isinstance(r, Union):
        return max(_width(r.left), _width(r.right))
    if isinstance(r, Star):
        return max(1, _width(r.inner))
    raise TypeError(f"not a Regex: {r!r}")


def _widest_star_body(r: Regex) -> int:
    if isinstance(r, (Empty, Epsilon, Atom)):
        return 0
    if isinstance(r, (Concat, Union)):
        return max(_widest_star_body(r.left), _widest_star_body(r.right))
    if isinstance(r, Star):
        return max(_width(r.inner), _widest_star_body(r.inner))
    raise TypeError(f"not a Regex: {r!r}")


def default_budget(antecedent: Sequence[Regex], word: str) -> SearchBudget:
    """A budget whose antecedent cap preserves completeness.

    In a minimal proof every CL copy consumes at least one input symbol,
    so at most len(word) copies coexist, each occupying at most the width
    of the widest star body; everything else is bounded by the widths of
    the original elements.
    """
    base = sum(_width(r) for r in antecedent)
    star = max((_widest_star_body(r) for r in antecedent), default=0)
    return SearchBudget(max(1, base + len(word) * star))


# --------------------------------------------------------------------------
# Lazy input-consumption strategy.


def _consume(r: Regex, word: str, pos: int) -> Iterator[tuple[int, Derivation]]:
    """Yield (end, proof of [r] ⊢ word[pos:end]), one proof per end."""
    seen: set[int] = set()
    for end, d in _consume_all(r, word, pos):
        if end not in seen:
            seen.add(end)
            yield end, d


def _consume_all(r: Regex, word: str, pos: int) -> Iterator[tuple[int, Derivation]]:
    if isinstance(r, Empty):
        return
    if isinstance(r, Epsilon):
        yield pos, Derivation(RuleName.EPS_L, Sequent((r,), ""), (_AXIOM2,), 0)
        return
    if isinstance(r, Atom):
        if pos < len(word) and word[pos] == r.ch:
            yield pos + 1, Derivation(RuleName.AXIOM1, Sequent((r,), r.ch))
        return
    if isinstance(r, Concat):
        for mid, left in _consume(r.left, word, pos):
            for end, right in _consume(r.right, word, mid):
                seg = word[pos:end]
                split = Derivation(
                    RuleName.DOT_R,
                    Sequent((r.left, r.right), seg),
                    (left, right),
                    (1, mid - pos),
                )
                yield end, Derivation(RuleName.DOT_L, Sequent((r,), seg), (split,), 0)
        return
    if isinstance(r, Union):
        for end, d in _consume(r.left, word, pos):
            yield end, Derivation(
                RuleName.PLUS_L1, Sequent((r,), word[pos:end]), (d,), 0
            )
        for end, d in _consume(r.right, word, pos):
            yield end, Derivation(
                RuleName.PLUS_L2, Sequent((r,), word[pos:end]), (d,), 0
            )
        return
    if isinstance(r, Star):
        # Zero uses, one final use, or one use followed by the star again.
        yield pos, Derivation(RuleName.WL, Sequent((r,), ""), (_AXIOM2,), 0)
        for end, d in _consume(r.inner, word, pos):
            yield end, Derivation(RuleName.DL, Sequent((r,), word[pos:end]), (d,), 0)
        for mid, first in _consume(r.inner, word, pos):
            if mid == pos:
                # An iteration that consumes nothing contributes nothing: a
                # proof without it exists, and skipping it is what makes the
                # search terminate.
                continue
            for end, rest in _consume(r, word, mid):
                seg = word[pos:end]
                split = Derivation(
                    RuleName.DOT_R,
                    Sequent((r.inner, r), seg),
                    (first, rest),
                    (1, mid - pos),
                )
                unfolded = Derivation(RuleName.DL, Sequent((r, r), seg), (split,), 0)
                yield end, Derivation(RuleName.CL, Sequent((r,), seg), (unfolded,), 0)
        return
    raise TypeError(f"not a Regex: {r!r}")


def _prove_suffix(ants: tuple[Regex, ...], word: str, pos: int) -> Derivation | None:
    """Prove [ants] ⊢ word[pos:] with the whole remainder consumed."""
    if not ants:
        return _AXIOM2 if pos == len(word) else None
    head, rest = ants[0], ants[1:]
    if not rest:
        for end, d in _consume(head, word, pos):
            if end == len(word):
                return d
        return None
    for mid, d in _consume(head, word, pos):
        tail = _prove_suffix(rest, word, mid)
        if tail is not None:
            return Derivation(
                RuleName.DOT_R,
                Sequent(ants, word[pos:]),
                (d, tail),
                (1, mid - pos),
            )
    return None


def search_lazy(antecedent: Iterable[Regex], word: str) -> MatchOutcome:
    """Decide derivability by lazy input consumption; total on all inputs."""
    proof = _prove_suffix(tuple(antecedent), word, 0)
    if proof is None:
        return MatchOutcome(False)
    return MatchOutcome(True, proof)


def decide(r: Regex, word: str) -> MatchOutcome:
    """Membership of word in the language of a single regex."""
    return search_lazy((r,), word)


# --------------------------------------------------------------------------
# Exhaustive rule enumeration over the reachable goal graph.

_Goal = tuple[tuple[Regex, ...], str]
_Instance = tuple[RuleName, "int | tuple[int, int] | None", tuple[_Goal, ...]]


class _TabledSearch:
    """Expands each reachable goal once, then propagates provability.

    Expansion records, per goal, every applicable rule instance with its
    premise goals.  A goal is provable when some instance has all premises
    provable; this is computed by counting down unsatisfied premises from
    the axiom instances upward.  One engine may serve many queries; the
    goal table is shared.
    """

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.instances: dict[_Goal, list[_Instance]] = {}
        self.exhausted = False
        self._proved: dict[_Goal, tuple[_Goal, _Instance]] | None = None

    def expand(self, root: _Goal) -> None:
        if root in self.instances:
            return
        self._proved = None
        pending = deque([root])
        while pending:
            goal = pending.popleft()
            if goal in self.instances:
                continue
            if len(self.instances) >= self.budget.max_nodes:
                self.exhausted = True
                return
            instances = self._instances_for(goal)
            self.instances[goal] = instances
            for _, _, premises in instances:
                for p in premises:
                    if p not in self.instances:
                        pending.append(p)

    def _instances_for(self, goal: _Goal) -> list[_Instance]:
        ants, v = goal
        # No rule ever eliminates the empty-language constant, so such
        # goals are dead wherever it sits.
        if any(isinstance(r, Empty) for r in ants):
            return []
        out: list[_Instance] = []
        n = len(ants)
        if n == 0:
            if v == "":
                out.append((RuleName.AXIOM2, None, ()))
            return out
        head, rest = ants[0], ants[1:]
        cap = self.budget.max_antecedent_len
        if n == 1 and isinstance(head, Atom) and v == head.ch:
            out.append((RuleName.AXIOM1, None, ()))
        if isinstance(head, Epsilon):
            out.append((RuleName.EPS_L, 0, ((rest, v),)))
        elif isinstance(head, Concat):
            if n + 1 <= cap:
                out.append((RuleName.DOT_L, 0, (((head.left, head.right) + rest, v),)))
        elif isinstance(head, Union):
            out.append((RuleName.PLUS_L1, 0, (((head.left,) + rest, v),)))
            out.append((RuleName.PLUS_L2, 0, (((head.right,) + rest, v),)))
        elif isinstance(head, Star):
            out.append((RuleName.WL, 0, ((rest, v),)))
            out.append((RuleName.DL, 0, (((head.inner,) + rest, v),)))
            if n + 1 <= cap:
                out.append((RuleName.CL, 0, (((head, head) + rest, v),)))
        # Every DotR split.  Splits that isolate an empty antecedent are
        # either the identity (premise equals the goal) or pair it with an
        # unprovable '⊢ nonempty' premise, so only 1 <= i <= n-1 can ever
        # contribute a proof.
        for i in range(1, n):
            left_ants, right_ants = ants[:i], ants[i:]
            for j in range(len(v) + 1):
                out.append(
                    (
                        RuleName.DOT_R,
                        (i, j),
                        ((left_ants, v[:j]), (right_ants, v[j:])),
                    )
                )
        return out

    def solve(self) -> None:
        if self._proved is not None:
            return
        owners: list[_Goal] = []
        specs: list[_Instance] = []
        remaining: list[int] = []
        watchers: dict[_Goal, list[int]] = {}
        proved: dict[_Goal, tuple[_Goal, _Instance]] = {}
        queue: deque[_Goal] = deque()

        for goal, instances in self.instances.items():
            for inst in instances:
                premises = inst[2]
                if not premises:
                    if goal not in proved:
                        proved[goal] = (goal, inst)
                        queue.append(goal)
                    continue
                idx = len(owners)
                owners.append(goal)
                specs.append(inst)
                remaining.append(len(premises))
                for p in premises:
                    watchers.setdefault(p, []).append(idx)

        while queue:
            goal = queue.popleft()
            for idx in watchers.get(goal, ()):
                remaining[idx] -= 1
                if remaining[idx] == 0:
                    owner = owners[idx]
                    if owner not in proved:
                        proved[owner] = (owner, specs[idx])
                        queue.append(owner)
        self._proved = proved

    def proved(self, goal: _Goal) -> bool:
        assert self._proved is not None, "solve() must run first"
        return goal in self._proved

    def derivation_for(self, goal: _Goal) -> Derivation | None:
        assert self._proved is not None, "solve() must run first"
        if goal not in self._proved:
            return None
        built: dict[_Goal, Derivation] = {}
        stack = [goal]
        while stack:
            g = stack[-1]
            if g in built:
                stack.pop()
                continue
            _, (rule, position, premises) = self._proved[g]
            missing = [p for p in premises if p not in built]
            if missing:
                stack.extend(missing)
                continue
            built[g] = Derivation(
                rule,
                Sequent(g[0], g[1]),
                tuple(built[p] for p in premises),
                position,
            )
            stack.pop()
        return built[goal]


def search_naive(
    antecedent: Iterable[Regex], word: str, budget: SearchBudget | None = None
) -> MatchOutcome:
    """Decide derivability by exhaustive rule enumeration under a budget.

    With the default budget the verdict is definitive; with a smaller
    ``max_nodes`` the outcome may come back ``exhausted`` instead of a
    definitive negative.
    """
    ants = tuple(antecedent)
    if budget is None:
        budget = default_budget(ants, word)
    if budget.max_antecedent_len < len(ants):
        raise ValueError("budget cap is smaller than the antecedent")
    engine = _TabledSearch(budget)
    goal: _Goal = (ants, word)
    engine.expand(goal)
    engine.solve()
    certificate = engine.derivation_for(goal)
    if certificate is not None:
        return MatchOutcome(True, certificate)
    return MatchOutcome(False, exhausted=engine.exhausted)
