"""seqre: regular-expression membership by bottom-up sequent proof search.

Matching a word against a regex is treated as proving the sequent
``r ⊢ w`` in a small inference system; a successful match yields a
machine-checkable derivation tree.  An independent Brzozowski-derivative
oracle is included for differential testing of the proof engines.
"""

from .kernel import (
    CheckFailure,
    Derivation,
    RuleName,
    SchemaError,
    Sequent,
    check_derivation,
    check_step,
    conclusion_of,
    derivation_from_json,
    derivation_to_json,
    find_failure,
    format_sequent,
    iter_nodes,
    step_error,
)
from .oracle import derivative, nullable, oracle_match
from .search import (
    MatchOutcome,
    SearchBudget,
    decide,
    default_budget,
    search_lazy,
    search_naive,
)
from .syntax import (
    ALPHABET,
    EMPTY,
    EPSILON,
    Atom,
    Concat,
    Empty,
    Epsilon,
    ParseError,
    Regex,
    Star,
    Union,
    degree,
    degree_seq,
    is_word,
    parse,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "Atom",
    "CheckFailure",
    "Concat",
    "Derivation",
    "EMPTY",
    "EPSILON",
    "Empty",
    "Epsilon",
    "MatchOutcome",
    "ParseError",
    "Regex",
    "RuleName",
    "SchemaError",
    "SearchBudget",
    "Sequent",
    "Star",
    "Union",
    "check_derivation",
    "check_step",
    "conclusion_of",
    "decide",
    "default_budget",
    "degree",
    "degree_seq",
    "derivation_from_json",
    "derivation_to_json",
    "derivative",
    "find_failure",
    "format_sequent",
    "is_word",
    "iter_nodes",
    "nullable",
    "oracle_match",
    "parse",
    "render",
    "search_lazy",
    "search_naive",
    "step_error",
]
