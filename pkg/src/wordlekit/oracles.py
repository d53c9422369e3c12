"""Brute-force references and claim verifiers.

The brute-force functions are deliberately independent of the engine:
they use their own counting-based feedback routine and a direct,
unmemoized game-tree recursion so they can serve as ground truth for
the memoized solver.  They carry hard instance caps because their cost
is exponential by construction.

The verify_* functions compare a claim's two sides (oracle vs engine, or
oracle vs oracle) on one instance and produce a small report; failures
carry a replayable witness.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .errors import CapExceeded
from .model import Alphabet, Dictionary, Word
from .reductions import (
    Graph,
    SetFamily,
    asc_to_wordle,
    graph_to_wordle,
    set_family_to_json,
    setcover_to_asc,
)


@dataclass
class VerificationReport:
    claim: str
    instance: str
    values: dict = field(default_factory=dict)  # name -> integer
    passed: bool = True
    elapsed: float = 0.0
    witness: str | None = None  # present on failure
    skipped: bool = False  # construction not applicable to this input
    trace: list = field(default_factory=list)

    def to_json(self) -> str:
        out = {
            "claim": self.claim,
            "instance": self.instance,
            "values": self.values,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 6),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.skipped:
            out["skipped"] = True
        if self.trace:
            out["trace"] = self.trace
        return json.dumps(out)


def _naive_mark(secret: Word, guess: Word):
    """Counting form of the feedback rule, kept separate from marking.mark.

    Greens consume matched positions; every other secret letter goes into
    a pool; a left-to-right scan turns guess letters yellow while the
    pool still holds a copy.
    """
    k = len(secret)
    colors = [0] * k
    pool: Counter = Counter()
    for i in range(k):
        if guess[i] == secret[i]:
            colors[i] = 2
        else:
            pool[secret[i]] += 1
    for i in range(k):
        if colors[i] == 0 and pool[guess[i]] > 0:
            colors[i] = 1
            pool[guess[i]] -= 1
    return tuple(colors)


def brute_force_set_cover(f: SetFamily, c: int, max_sets: int = 20) -> bool:
    """Can some <= c of the sets cover the whole universe?"""
    if len(f) > max_sets:
        raise CapExceeded(f"family of {len(f)} sets above cap {max_sets}")
    universe = set(range(1, f.universe + 1))
    for size in range(min(c, len(f)) + 1):
        for combo in itertools.combinations(f.sets, size):
            if set().union(*combo) == universe:
                return True
    return False


def brute_force_asc(f: SetFamily, c: int, max_sets: int = 20) -> bool:
    """Can some <= c of the sets cover all but at most one element?"""
    if len(f) > max_sets:
        raise CapExceeded(f"family of {len(f)} sets above cap {max_sets}")
    universe = set(range(1, f.universe + 1))
    for size in range(min(c, len(f)) + 1):
        for combo in itertools.combinations(f.sets, size):
            if len(universe - set().union(*combo)) <= 1:
                return True
    return False


def brute_force_gamma(g: Graph, max_vertices: int = 16) -> int:
    """Minimum dominating-set size by ascending subset enumeration."""
    if g.n > max_vertices:
        raise CapExceeded(f"graph on {g.n} vertices above cap {max_vertices}")
    vertices = range(1, g.n + 1)
    closed = {v: {v, *g.neighbors(v)} for v in vertices}
    all_vs = set(vertices)
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(vertices, size):
            dominated: set = set()
            for v in combo:
                dominated |= closed[v]
            if dominated == all_vs:
                return size
    raise AssertionError("the whole vertex set always dominates")


def brute_force_decide(
    d: Dictionary,
    guesses_left: int,
    guess_mode="full_dictionary",
    max_words: int = 12,
    max_guesses: int = 3,
) -> bool:
    """Unmemoized game-tree recursion, one branch per (guess, secret) pair.

    Recursion narrows to the words consistent with the observed feedback
    and spends a guess even when the feedback was all green, exactly as
    the plain recursion is written; for two or more words the outcome is
    unaffected because any other secret already forces a second guess.
    """
    mode = getattr(guess_mode, "value", guess_mode)
    if mode not in ("full_dictionary", "feasible_only"):
        raise ValueError(f"unknown guess mode {guess_mode!r}")
    if len(d) > max_words:
        raise CapExceeded(f"dictionary of {len(d)} words above cap {max_words}")
    if guesses_left > max_guesses:
        raise CapExceeded(f"budget {guesses_left} above cap {max_guesses}")
    full = d.words

    def play(words, left):
        if left == 0:
            return False
        if len(words) == 1:
            return True
        pool = full if mode == "full_dictionary" else words
        for p in pool:
            potential = True
            for w in words:
                m = _naive_mark(w, p)
                narrowed = tuple(q for q in words if _naive_mark(q, p) == m)
                if not play(narrowed, left - 1):
                    potential = False
                    break
            if potential:
                return True
        return False

    return play(full, guesses_left)


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _family_text(f: SetFamily) -> str:
    return f"n={f.universe} sets={[sorted(s) for s in f.sets]}"


def verify_lemma1(f: SetFamily, c: int) -> VerificationReport:
    """Full cover of f iff almost-cover of the doubled family, same budget."""

    def run():
        sc = brute_force_set_cover(f, c)
        asc = brute_force_asc(setcover_to_asc(f), c)
        return sc, asc

    (sc, asc), elapsed = _timed(run)
    passed = sc == asc
    return VerificationReport(
        claim="cover-iff-almost-cover-after-doubling",
        instance=f"{_family_text(f)} c={c}",
        values={"set_cover": int(sc), "almost_cover_doubled": int(asc), "c": c},
        passed=passed,
        elapsed=elapsed,
        witness=None if passed else set_family_to_json(f),
    )


def verify_thm1(f: SetFamily, c: int) -> VerificationReport:
    """Almost-cover within c iff the gadget game is winnable in c+1."""
    from .errors import DuplicateWord
    from .solver import decide

    instance = f"{_family_text(f)} c={c}"
    t0 = time.perf_counter()
    try:
        d, budget = asc_to_wordle(f, c)
    except DuplicateWord as e:
        return VerificationReport(
            claim="almost-cover-iff-gadget-game",
            instance=instance,
            values={},
            passed=True,
            elapsed=time.perf_counter() - t0,
            skipped=True,
            trace=[f"construction collision: {e}"],
        )
    asc = brute_force_asc(f, c)
    game = decide(d, budget)
    elapsed = time.perf_counter() - t0
    passed = asc == game
    return VerificationReport(
        claim="almost-cover-iff-gadget-game",
        instance=instance,
        values={
            "almost_cover": int(asc),
            "game": int(game),
            "budget": budget,
            "words": len(d),
        },
        passed=passed,
        elapsed=elapsed,
        witness=None if passed else set_family_to_json(f),
    )


def verify_thm2(g: Graph, dictionary: Dictionary | None = None) -> VerificationReport:
    """Domination number brackets the gadget game value within [W-4, W].

    Passing a dictionary overrides the generated gadget, which is how a
    tampered instance (words removed) is shown to break the bound.
    """
    from .solver import w_min

    def run():
        gamma = brute_force_gamma(g)
        d = dictionary if dictionary is not None else graph_to_wordle(g)
        return gamma, w_min(d), len(d)

    (gamma, w, words), elapsed = _timed(run)
    passed = gamma <= w <= gamma + 4
    return VerificationReport(
        claim="domination-brackets-game-value",
        instance=f"graph n={g.n} m={len(g.edges())}",
        values={"gamma": gamma, "w": w, "words": words},
        passed=passed,
        elapsed=elapsed,
        witness=None if passed else json.dumps(
            {"n": g.n, "edges": g.edges(), "gamma": gamma, "w": w}
        ),
    )


def verify_lemma3(d: Dictionary) -> VerificationReport:
    """Guessing any feasible word wins within alphabet-size guesses.

    Also checks the mechanism behind the bound: after each guess, every
    position's surviving-symbol set either becomes the singleton of the
    guessed letter (green) or loses that letter (otherwise).
    """
    from .feasibility import FeasibleSet, refine
    from .strategies import Policy, position_symbol_sets, run_policy

    t0 = time.perf_counter()
    sigma = d.sigma
    worst = 0
    worst_trace: list = []
    witness = None
    law_ok = True
    for secret in d.words:
        t = run_policy(Policy.ANY_FEASIBLE, d, secret)
        f = FeasibleSet.full(d)
        trace = []
        for g, m in t:
            before = position_symbol_sets(d, f)
            f = refine(f, g, m)
            after = position_symbol_sets(d, f)
            trace.append(",".join(str(len(s)) for s in after))
            for pos in range(d.k):
                if m[pos] == 2:
                    good = after[pos] == frozenset((g[pos],))
                else:
                    good = g[pos] not in after[pos] and after[pos] <= before[pos]
                if not good:
                    law_ok = False
                    witness = (
                        f"secret={d.alphabet.word_text(secret)} "
                        f"guess={d.alphabet.word_text(g)} position={pos}"
                    )
        if not t.won or len(t) > sigma:
            witness = f"secret={d.alphabet.word_text(secret)} took {len(t)} guesses"
        if len(t) > worst:
            worst = len(t)
            worst_trace = [
                f"secret={d.alphabet.word_text(secret)}"
            ] + [f"step{i + 1} symbol-set sizes {row}" for i, row in enumerate(trace)]
    passed = worst <= sigma and law_ok and witness is None
    return VerificationReport(
        claim="any-feasible-wins-within-alphabet-size",
        instance=f"dictionary k={d.k} sigma={sigma} words={len(d)}",
        values={"max_guesses": worst, "sigma": sigma, "secrets": len(d)},
        passed=passed,
        elapsed=time.perf_counter() - t0,
        witness=witness,
        trace=worst_trace,
    )


def sweep_set_families(max_n: int = 4, max_sets: int = 3):
    """Every family of distinct non-empty sets whose union is 1..n, n <= max_n."""
    for n in range(1, max_n + 1):
        full = set(range(1, n + 1))
        subsets = [
            frozenset(
                i + 1 for i in range(n) if mask >> i & 1
            )
            for mask in range(1, 1 << n)
        ]
        for size in range(1, max_sets + 1):
            for combo in itertools.combinations(subsets, size):
                if set().union(*combo) == full:
                    yield SetFamily(universe=n, sets=combo)


def sweep_dictionaries(sigma: int = 3, max_k: int = 2, max_words: int = 6):
    """Every dictionary over a fixed alphabet up to the given size caps."""
    alphabet = Alphabet([chr(ord("A") + i) for i in range(sigma)])
    for k in range(1, max_k + 1):
        words = list(itertools.product(range(sigma), repeat=k))
        for size in range(1, max_words + 1):
            for combo in itertools.combinations(words, size):
                yield Dictionary(alphabet, combo)


def random_dictionary(rng: random.Random, sigma: int, k: int, n_words: int) -> Dictionary:
    """n_words distinct random words; n_words is capped by the word space."""
    space = sigma**k
    n_words = min(n_words, space)
    alphabet = Alphabet([chr(ord("A") + i) for i in range(sigma)])
    if space <= 4096:
        words = list(itertools.product(range(sigma), repeat=k))
        picked = rng.sample(words, n_words)
    else:
        seen = set()
        while len(seen) < n_words:
            seen.add(tuple(rng.randrange(sigma) for _ in range(k)))
        picked = sorted(seen)
    return Dictionary(alphabet, picked)
