"""Exact adversarial search: can every secret be found within the budget?

The recursion mirrors the obvious game tree: pick a guess, let the
adversary pick the feedback class, continue on that class with one fewer
guess.  States are (feasible-set bits, guesses left) and are memoized;
classes with identical feedback collapse to one branch; classes are
tried largest first and a guess is abandoned at its first losing class.
A guess that is itself feasible wins its own all-green class outright.

Guesses are drawn from the full dictionary by default.  The restricted
mode draws them from the current feasible set only, which can be
strategically weaker; both are kept selectable.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded, EmptyFeasibleSet, WordleKitError
from .feasibility import FeasibleSet, mark_matrix
from .model import GREEN, Dictionary, Marking, Word


class GuessMode(enum.Enum):
    FULL_DICTIONARY = "full_dictionary"
    FEASIBLE_ONLY = "feasible_only"


@dataclass(frozen=True)
class SolveOptions:
    guess_mode: GuessMode = GuessMode.FULL_DICTIONARY
    memo_enabled: bool = True
    node_budget: int | None = None  # states expanded before giving up

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")


@dataclass
class SolveStats:
    nodes: int = 0
    memo_hits: int = 0
    elapsed: float = 0.0


@dataclass
class StrategyTree:
    """One guess per node; children keyed by marking, all-green child None."""

    guess: Word
    children: dict = field(default_factory=dict)  # Marking -> StrategyTree | None


def replay_strategy(tree: StrategyTree, secret: Word) -> int:
    """Number of guesses the tree takes to hit the secret.

    Raises WordleKitError if the tree has no branch for an observed
    marking, which would mean the tree is unsound for this secret.
    """
    from .marking import mark

    node = tree
    count = 0
    while True:
        count += 1
        m = mark(secret, node.guess)
        if all(c == GREEN for c in m):
            return count
        if m not in node.children or node.children[m] is None:
            raise WordleKitError(
                f"strategy has no continuation for marking {m} at guess {count}"
            )
        node = node.children[m]


class Solver:
    """Search engine bound to one dictionary; memo persists across calls."""

    def __init__(self, d: Dictionary, opts: SolveOptions | None = None):
        self.d = d
        self.opts = opts or SolveOptions()
        self.last_stats = SolveStats()
        self._memo: dict = {}  # (bits, guesses_left) -> bool
        self._codes: list = [None] * len(d)  # guess index -> per-secret marking bytes
        self._win_code = bytes([GREEN]) * d.k
        self._full_pool = tuple(range(len(d)))
        self._nodes = 0
        self._hits = 0
        self._budget: int | None = None

    # -- public operations ------------------------------------------------

    def decide(self, guesses_left: int) -> bool:
        """True iff some strategy finds any secret within guesses_left."""
        full = (1 << len(self.d)) - 1
        return self._run(lambda: self._decide(full, guesses_left))

    def best_guess(self, f: FeasibleSet, guesses_left: int) -> Word | None:
        """Lowest-index guess whose every feedback class stays winnable.

        The all-green class counts as an immediate win; every other class
        must be winnable within guesses_left - 1.  None when no guess in
        the active pool works.
        """
        if f.is_empty:
            raise EmptyFeasibleSet("no candidate secrets to search over")
        if guesses_left < 1:
            raise ValueError("guesses_left must be positive")

        def scan():
            for g in self._pool(f.bits):
                if self._guess_wins(f.bits, guesses_left, g):
                    return self.d.words[g]
            return None

        return self._run(scan)

    def strategy_tree(self, guesses_left: int) -> StrategyTree | None:
        """Explicit winning policy, or None when decide says no."""
        full = (1 << len(self.d)) - 1

        def build():
            if not self._decide(full, guesses_left):
                return None
            return self._build(full, guesses_left)

        return self._run(build)

    def w_min(self) -> int:
        """Least guess budget that still wins; at most the alphabet size."""

        def ascend():
            for l in range(1, self.d.sigma + 1):
                if self._decide((1 << len(self.d)) - 1, l):
                    return l
            raise WordleKitError(
                "no winning budget up to the alphabet-size ceiling"
            )

        return self._run(ascend)

    # -- internals ---------------------------------------------------------

    def _run(self, fn):
        self._nodes = 0
        self._hits = 0
        self._budget = self.opts.node_budget
        t0 = time.perf_counter()
        try:
            return fn()
        finally:
            self.last_stats = SolveStats(
                nodes=self._nodes,
                memo_hits=self._hits,
                elapsed=time.perf_counter() - t0,
            )

    def _pool(self, bits: int):
        if self.opts.guess_mode is GuessMode.FULL_DICTIONARY:
            return self._full_pool
        return _bit_indices(bits)

    def _codes_for(self, g: int):
        codes = self._codes[g]
        if codes is None:
            rows = mark_matrix(self.d.matrix, self.d.words[g])
            codes = [row.tobytes() for row in rows]
            self._codes[g] = codes
        return codes

    def _decide(self, bits: int, guesses_left: int) -> bool:
        if guesses_left <= 0:
            return False
        if bits & (bits - 1) == 0:
            return True
        memo = self.opts.memo_enabled
        key = (bits, guesses_left)
        if memo:
            cached = self._memo.get(key)
            if cached is not None:
                self._hits += 1
                return cached
        self._expand()
        result = False
        for g in self._pool(bits):
            if self._guess_wins(bits, guesses_left, g):
                result = True
                break
        if memo:
            self._memo[key] = result
        return result

    def _expand(self):
        self._nodes += 1
        if self._budget is not None and self._nodes > self._budget:
            raise BudgetExceeded(
                f"gave up after expanding {self._budget} states"
            )

    def _guess_wins(self, bits: int, guesses_left: int, g: int) -> bool:
        blocks = self._partition(bits, g)
        blocks.pop(self._win_code, None)  # guessing the secret itself
        for sub in sorted(blocks.values(), key=_neg_popcount):
            if not self._decide(sub, guesses_left - 1):
                return False
        return True

    def _partition(self, bits: int, g: int) -> dict:
        codes = self._codes_for(g)
        blocks: dict = {}
        for i in _bit_indices(bits):
            code = codes[i]
            blocks[code] = blocks.get(code, 0) | (1 << i)
        return blocks

    def _build(self, bits: int, guesses_left: int) -> StrategyTree:
        if bits & (bits - 1) == 0:
            w = self.d.words[bits.bit_length() - 1]
            return StrategyTree(guess=w, children={(GREEN,) * self.d.k: None})
        for g in self._pool(bits):
            blocks = self._partition(bits, g)
            has_win = blocks.pop(self._win_code, None) is not None
            if not all(
                self._decide(sub, guesses_left - 1)
                for sub in sorted(blocks.values(), key=_neg_popcount)
            ):
                continue
            children: dict = {}
            if has_win:
                children[(GREEN,) * self.d.k] = None
            for code, sub in blocks.items():
                children[tuple(code)] = self._build(sub, guesses_left - 1)
            return StrategyTree(guess=self.d.words[g], children=children)
        raise WordleKitError("winnable state has no winning guess")  # unreachable


def _bit_indices(bits: int) -> list:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def _neg_popcount(bits: int) -> int:
    return -bits.bit_count()


def decide(d: Dictionary, guesses_left: int, opts: SolveOptions | None = None) -> bool:
    return Solver(d, opts).decide(guesses_left)


def best_guess(
    d: Dictionary,
    f: FeasibleSet,
    guesses_left: int,
    opts: SolveOptions | None = None,
) -> Word | None:
    return Solver(d, opts).best_guess(f, guesses_left)


def strategy_tree(
    d: Dictionary, guesses_left: int, opts: SolveOptions | None = None
) -> StrategyTree | None:
    return Solver(d, opts).strategy_tree(guesses_left)


def w_min(d: Dictionary, opts: SolveOptions | None = None) -> int:
    return Solver(d, opts).w_min()


def decide_constant_alphabet(
    d: Dictionary, guesses_left: int, opts: SolveOptions | None = None
) -> bool:
    """decide, but answer yes outright when the alphabet fits the budget.

    Guessing any still-feasible word each turn wins within sigma guesses,
    so sigma <= guesses_left needs no search at all.
    """
    if d.sigma <= guesses_left:
        return True
    return Solver(d, opts).decide(guesses_left)
