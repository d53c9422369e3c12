"""Exact decision engine and gadget generators for Wordle-style games."""

from .errors import (
    BudgetExceeded,
    CapExceeded,
    DuplicateWord,
    EmptyDictionary,
    EmptyFeasibleSet,
    IncompatibleWords,
    LengthMismatch,
    MarkingParseError,
    NotFourRegular,
    UnknownSymbol,
    WordleKitError,
)
from .feasibility import (
    FeasibleSet,
    filter_feasible,
    is_feasible_exact,
    is_feasible_paper,
    partition_by_marking,
    refine,
)
from .marking import OnePassConflict, Transcript, mark, mark_one_pass_literal, simulate_game
from .model import (
    Alphabet,
    Dictionary,
    History,
    MarkColor,
    Marking,
    Word,
    marking_to_digits,
    parse_dictionary,
    parse_marking,
    serialize_dictionary,
)
from .reductions import (
    Graph,
    SetFamily,
    asc_to_wordle,
    circulant_graph,
    complete_graph,
    graph_to_wordle,
    parse_graph,
    serialize_graph,
    set_family_from_json,
    set_family_to_json,
    setcover_to_asc,
)
from .solver import (
    GuessMode,
    SolveOptions,
    SolveStats,
    Solver,
    StrategyTree,
    best_guess,
    decide,
    decide_constant_alphabet,
    replay_strategy,
    strategy_tree,
    w_min,
)
from .strategies import Policy, next_guess, position_symbol_sets, run_policy, suggest_guess

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BudgetExceeded",
    "CapExceeded",
    "Dictionary",
    "DuplicateWord",
    "EmptyDictionary",
    "EmptyFeasibleSet",
    "FeasibleSet",
    "Graph",
    "GuessMode",
    "History",
    "IncompatibleWords",
    "LengthMismatch",
    "MarkColor",
    "Marking",
    "MarkingParseError",
    "NotFourRegular",
    "OnePassConflict",
    "Policy",
    "SetFamily",
    "SolveOptions",
    "SolveStats",
    "Solver",
    "StrategyTree",
    "Transcript",
    "UnknownSymbol",
    "Word",
    "WordleKitError",
    "__version__",
    "asc_to_wordle",
    "best_guess",
    "circulant_graph",
    "complete_graph",
    "decide",
    "decide_constant_alphabet",
    "filter_feasible",
    "graph_to_wordle",
    "is_feasible_exact",
    "is_feasible_paper",
    "mark",
    "mark_one_pass_literal",
    "marking_to_digits",
    "next_guess",
    "parse_dictionary",
    "parse_graph",
    "parse_marking",
    "partition_by_marking",
    "position_symbol_sets",
    "refine",
    "replay_strategy",
    "run_policy",
    "serialize_dictionary",
    "serialize_graph",
    "set_family_from_json",
    "set_family_to_json",
    "setcover_to_asc",
    "simulate_game",
    "strategy_tree",
    "suggest_guess",
    "w_min",
]
