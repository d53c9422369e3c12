"""Executable guessing policies.

any_feasible guesses the lowest-index word still consistent with the
feedback so far; every guess either pins a position green or knocks its
own letter out of that position's surviving-symbol set, which bounds the
game length by the alphabet size.  greedy_minimax picks the dictionary
word whose worst feedback class over the current candidates is smallest,
not counting the all-green class (that class ends the game); it has no
optimality guarantee and exists for large dictionaries where exact
search is off the table.
"""

from __future__ import annotations

import enum

from .errors import EmptyFeasibleSet
from .feasibility import FeasibleSet, partition_by_marking, refine
from .marking import Transcript, mark
from .model import GREEN, Dictionary, Word


class Policy(enum.Enum):
    ANY_FEASIBLE = "any_feasible"
    GREEDY_MINIMAX = "greedy_minimax"


def next_guess(policy: Policy, d: Dictionary, f: FeasibleSet) -> Word:
    """The policy's deterministic choice; ties go to the lowest index."""
    if f.is_empty:
        raise EmptyFeasibleSet("no candidate secrets left")
    if policy is Policy.ANY_FEASIBLE:
        low = f.bits & -f.bits
        return d.words[low.bit_length() - 1]
    if policy is Policy.GREEDY_MINIMAX:
        win = (GREEN,) * d.k
        best_idx = 0
        best_score = None
        for i in range(len(d)):
            blocks = partition_by_marking(f, d.words[i])
            score = max(
                (b.count for m, b in blocks.items() if m != win), default=0
            )
            if best_score is None or score < best_score:
                best_idx, best_score = i, score
        return d.words[best_idx]
    raise ValueError(f"unknown policy {policy!r}")


def run_policy(policy: Policy, d: Dictionary, secret: Word) -> Transcript:
    """Play guess/feedback rounds against a fixed secret until all green."""
    secret = tuple(secret)
    if secret not in d:
        raise ValueError("secret must be a dictionary word")
    f = FeasibleSet.full(d)
    steps = []
    while True:
        g = next_guess(policy, d, f)
        m = mark(secret, g)
        steps.append((g, m))
        if all(c == GREEN for c in m):
            return Transcript(steps=tuple(steps), won=True)
        f = refine(f, g, m)


def position_symbol_sets(d: Dictionary, f: FeasibleSet) -> list:
    """Per position, the set of symbols still possible among f's words."""
    sets: list = [set() for _ in range(d.k)]
    for i in f.indices():
        for pos, s in enumerate(d.words[i]):
            sets[pos].add(s)
    return [frozenset(s) for s in sets]


def suggest_guess(d: Dictionary, f: FeasibleSet, exact_threshold: int = 64):
    """Next-guess recommendation: exact when few candidates remain.

    At or below the threshold, searches for the guess that is optimal in
    the worst case (lowest winning budget from the current candidates);
    above it, falls back to the worst-block heuristic.  Returns the word
    and which picker produced it ("exact" or "heuristic").
    """
    from .solver import Solver

    if f.is_empty:
        raise EmptyFeasibleSet("no candidate secrets left")
    if f.count <= exact_threshold:
        solver = Solver(d)
        for budget in range(1, d.sigma + 1):
            g = solver.best_guess(f, budget)
            if g is not None:
                return g, "exact"
    return next_guess(Policy.GREEDY_MINIMAX, d, f), "heuristic"
