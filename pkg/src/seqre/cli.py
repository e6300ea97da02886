"""Command-line front end: match, prove, check, compare.

Exit codes: 0 success (derivable / proof valid / no disagreement),
1 negative (not derivable / proof invalid / disagreement found),
2 usage or parse error, 3 budget exhausted (naive engine only).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from .enumeration import random_regex, regexes_upto, words_upto
from .kernel import (
    Derivation,
    SchemaError,
    derivation_from_json,
    derivation_to_json,
    find_failure,
    format_sequent,
)
from .oracle import derivative, nullable
from .search import (
    DEFAULT_MAX_NODES,
    SearchBudget,
    _TabledSearch,
    decide,
    default_budget,
    search_naive,
)
from .syntax import ParseError, is_word, parse, render


def render_tree(node: Derivation) -> str:
    """One node per line, premises indented two spaces below their rule."""
    lines: list[str] = []

    def walk(n: Derivation, depth: int) -> None:
        lines.append("  " * depth + f"{n.rule.value}  {format_sequent(n.conclusion)}")
        for p in n.premises:
            walk(p, depth + 1)

    walk(node, 0)
    return "\n".join(lines)


def _parse_regex_arg(text: str) -> "object":
    try:
        return parse(text)
    except ParseError as exc:
        print(f"error: cannot parse regex: {exc}", file=sys.stderr)
        return None


def _check_word_arg(word: str) -> bool:
    if not is_word(word):
        print("error: word may only contain ASCII letters and digits", file=sys.stderr)
        return False
    return True


def cmd_match(args: argparse.Namespace) -> int:
    regex = _parse_regex_arg(args.regex)
    if regex is None or not _check_word_arg(args.word):
        return 2
    if args.engine == "lazy":
        outcome = decide(regex, args.word)
    else:
        if args.cap is not None:
            budget = SearchBudget(args.cap, args.max_nodes)
        else:
            cap = default_budget((regex,), args.word).max_antecedent_len
            budget = SearchBudget(cap, args.max_nodes)
        outcome = search_naive((regex,), args.word, budget)
        if outcome.exhausted:
            print("BUDGET EXHAUSTED")
            return 3
    if outcome.derivable:
        print("MATCH")
        return 0
    print("NO MATCH")
    return 1


def cmd_prove(args: argparse.Namespace) -> int:
    regex = _parse_regex_arg(args.regex)
    if regex is None or not _check_word_arg(args.word):
        return 2
    outcome = decide(regex, args.word)
    if not outcome.derivable:
        print("not derivable", file=sys.stderr)
        return 1
    assert outcome.certificate is not None
    if args.format == "json":
        print(json.dumps(derivation_to_json(outcome.certificate), indent=2))
    else:
        print(render_tree(outcome.certificate))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: not valid JSON: {exc}", file=sys.stderr)
        return 2
    try:
        derivation = derivation_from_json(doc)
    except SchemaError as exc:
        print(f"error: bad derivation document: {exc}", file=sys.stderr)
        return 2
    failure = find_failure(derivation)
    if failure is None:
        print("valid")
        return 0
    where = "root" + "".join(f".premises[{i}]" for i in failure.path)
    print(f"invalid step at {where}: {failure.reason}")
    return 1


@dataclass
class ComparisonReport:
    regex_count: int
    word_count: int
    disagreements: list[tuple[str, str, bool, bool, bool]] = field(default_factory=list)
    undecided: list[tuple[str, str]] = field(default_factory=list)


def run_compare(
    alphabet: str,
    max_degree: int,
    max_len: int,
    seed: int,
    random_count: int | None,
) -> ComparisonReport:
    """Cross both engines and the derivative oracle over a regex corpus.

    The corpus is either every regex up to max_degree (ordered by degree,
    then rendered text) or ``random_count`` seeded random ones; each is
    crossed with every word up to max_len.
    """
    words = words_upto(alphabet, max_len)
    if random_count is None:
        corpus = regexes_upto(alphabet, max_degree)
    else:
        rng = random.Random(seed)
        corpus = [random_regex(rng, alphabet, max_degree) for _ in range(random_count)]

    report = ComparisonReport(len(corpus), len(words))
    pad = "a" * max_len
    for regex in corpus:
        text = render(regex)

        # Derivative chains reuse shared prefixes: words_upto lists every
        # prefix before its extensions.
        derived = {"": regex}
        oracle_verdicts = {}
        for w in words:
            if w:
                derived[w] = derivative(derived[w[:-1]], w[-1])
            oracle_verdicts[w] = nullable(derived[w])

        engine = _TabledSearch(default_budget((regex,), pad))
        for w in words:
            engine.expand(((regex,), w))
        engine.solve()

        for w in words:
            lazy = decide(regex, w).derivable
            naive = engine.proved(((regex,), w))
            if engine.exhausted and not naive:
                report.undecided.append((text, w))
                continue
            oracle = oracle_verdicts[w]
            if not (lazy == naive == oracle):
                report.disagreements.append((text, w, lazy, naive, oracle))
    return report


def cmd_compare(args: argparse.Namespace) -> int:
    if not args.alphabet or not is_word(args.alphabet):
        print("error: alphabet must be non-empty ASCII letters/digits", file=sys.stderr)
        return 2
    report = run_compare(
        args.alphabet, args.max_degree, args.max_len, args.seed, args.random
    )
    for text, w, lazy, naive, oracle in report.disagreements:
        print(f"DISAGREE regex={text} word={w!r} lazy={lazy} naive={naive} oracle={oracle}")
    for text, w in report.undecided:
        print(f"UNDECIDED regex={text} word={w!r} (budget exhausted)")
    total = report.regex_count * report.word_count
    print(f"checked {report.regex_count} regexes x {report.word_count} words = {total} cases")
    print(f"disagreements: {len(report.disagreements)}")
    if report.disagreements:
        return 1
    if report.undecided:
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqre",
        description="Regular-expression membership by sequent proof search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_match = sub.add_parser("match", help="decide whether a word matches a regex")
    p_match.add_argument("regex")
    p_match.add_argument("word")
    p_match.add_argument("--engine", choices=("lazy", "naive"), default="lazy")
    p_match.add_argument("--cap", type=int, help="antecedent length cap (naive engine)")
    p_match.add_argument(
        "--max-nodes",
        type=int,
        default=None,
        help="goal expansion limit (naive engine)",
    )
    p_match.set_defaults(func=cmd_match)

    p_prove = sub.add_parser("prove", help="emit a derivation for a match")
    p_prove.add_argument("regex")
    p_prove.add_argument("word")
    p_prove.add_argument("--format", choices=("json", "tree"), default="json")
    p_prove.set_defaults(func=cmd_prove)

    p_check = sub.add_parser("check", help="validate a derivation JSON file")
    p_check.add_argument("path")
    p_check.set_defaults(func=cmd_check)

    p_cmp = sub.add_parser(
        "compare", help="differential test: lazy vs naive vs derivative oracle"
    )
    p_cmp.add_argument("--alphabet", default="ab")
    p_cmp.add_argument("--max-degree", type=int, default=6)
    p_cmp.add_argument("--max-len", type=int, default=4)
    p_cmp.add_argument("--seed", type=int, default=0)
    p_cmp.add_argument(
        "--random",
        type=int,
        default=None,
        metavar="N",
        help="test N seeded random regexes instead of exhaustive enumeration",
    )
    p_cmp.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "match":
        if args.engine == "lazy" and (args.cap is not None or args.max_nodes is not None):
            parser.error("--cap/--max-nodes require --engine naive")
        if args.max_nodes is None:
            args.max_nodes = DEFAULT_MAX_NODES
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
