"""Which dictionary words can still be the secret, given played feedback.

Two predicates are provided.  The exact one re-marks the candidate
against every past guess and demands identical feedback; it is the
default everywhere.  The four-condition one checks the classic rule list
(gray letters excluded, yellow positions excluded, green positions
forced, yellow letters required); with repeated letters those rules
ignore multiplicity, so the two predicates can disagree and both are
kept so the gap is observable.

Feasible sets are immutable bit vectors over dictionary indices, backed
by a plain int.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import IncompatibleWords
from .marking import mark
from .model import GRAY, GREEN, YELLOW, Dictionary, History, Marking, Word


@dataclass(frozen=True)
class FeasibleSet:
    """Subset of a dictionary's words, as index bits."""

    dictionary: Dictionary
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << len(self.dictionary)):
            raise ValueError("membership bits outside dictionary range")

    @classmethod
    def full(cls, d: Dictionary) -> "FeasibleSet":
        return cls(d, (1 << len(d)) - 1)

    @classmethod
    def of(cls, d: Dictionary, indices: Iterable[int]) -> "FeasibleSet":
        bits = 0
        for i in indices:
            if not 0 <= i < len(d):
                raise ValueError(f"word index {i} outside dictionary")
            bits |= 1 << i
        return cls(d, bits)

    @property
    def count(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def __contains__(self, index: int) -> bool:
        return 0 <= index < len(self.dictionary) and (self.bits >> index) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def indices(self) -> list:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def words(self) -> list:
        return [self.dictionary.words[i] for i in self.indices()]

    def word_texts(self) -> list:
        return [self.dictionary.word_text(i) for i in self.indices()]


def _check_history(k: int, h: History) -> None:
    for guess, m in h:
        if len(guess) != k or len(m) != k:
            raise IncompatibleWords(
                f"history step with guess length {len(guess)} and marking "
                f"length {len(m)} against word length {k}"
            )


def is_feasible_exact(candidate: Word, h: History) -> bool:
    """True iff re-marking the candidate reproduces every observed marking."""
    _check_history(len(candidate), h)
    return all(mark(candidate, guess) == tuple(m) for guess, m in h)


def is_feasible_paper(candidate: Word, h: History) -> bool:
    """True iff the four positional rules hold for every history step.

    A letter counts as excluded (rule 1) only when some guess contains it
    and every occurrence of it in that guess came back gray; a green or
    yellow copy elsewhere in the same guess keeps the letter alive.
    """
    _check_history(len(candidate), h)
    k = len(candidate)
    for guess, m in h:
        for i in range(k):
            if m[i] == GREEN:
                if candidate[i] != guess[i]:
                    return False  # green position forced
            elif m[i] == YELLOW:
                c = guess[i]
                if candidate[i] == c:
                    return False  # yellow excludes this position
                if not any(candidate[t] == c for t in range(k) if t != i):
                    return False  # yellow letter must appear elsewhere
        for c in set(guess):
            if all(m[i] == GRAY for i in range(k) if guess[i] == c):
                if c in candidate:
                    return False  # letter wholly gray in a guess
    return True


def mark_matrix(secrets: np.ndarray, guess: Word) -> np.ndarray:
    """Color one guess against many secrets at once.

    secrets is an (n, k) integer array of secret rows; returns an (n, k)
    uint8 array of colors.  Row r equals mark(secrets[r], guess).
    """
    n, k = secrets.shape
    if len(guess) != k:
        raise IncompatibleWords(
            f"guess length {len(guess)} against word length {k}"
        )
    g = np.asarray(guess, dtype=secrets.dtype)
    green = secrets == g[None, :]
    colors = np.where(green, GREEN, GRAY).astype(np.uint8)
    for c in set(guess):
        cols = [j for j in range(k) if guess[j] == c]
        sub_green = green[:, cols]
        # Non-green copies of c in each secret row claim the leftmost
        # non-green guess columns holding c, one each.
        avail = (secrets == c).sum(axis=1) - sub_green.sum(axis=1)
        nongreen = ~sub_green
        rank = np.cumsum(nongreen, axis=1) - nongreen
        yellow = nongreen & (rank < avail[:, None])
        if yellow.any():
            sub = colors[:, cols]
            sub[yellow] = YELLOW
            colors[:, cols] = sub
    return colors


def filter_feasible(d: Dictionary, h: History, mode: str = "exact") -> FeasibleSet:
    """Bit set of d's words passing the selected predicate for history h."""
    _check_history(d.k, h)
    if mode == "exact":
        keep = np.ones(len(d), dtype=bool)
        for guess, m in h:
            target = np.asarray(m, dtype=np.uint8)
            keep &= (mark_matrix(d.matrix, guess) == target[None, :]).all(axis=1)
        bits = 0
        for i in np.flatnonzero(keep):
            bits |= 1 << int(i)
        return FeasibleSet(d, bits)
    if mode == "paper":
        bits = 0
        for i, w in enumerate(d.words):
            if is_feasible_paper(w, h):
                bits |= 1 << i
        return FeasibleSet(d, bits)
    raise ValueError(f"unknown feasibility mode {mode!r}")


def partition_by_marking(f: FeasibleSet, guess: Word) -> dict:
    """Group f's words by the marking the guess would receive from each.

    Returns {Marking: FeasibleSet}; blocks are disjoint and cover f.
    """
    d = f.dictionary
    idx = f.indices()
    if not idx:
        return {}
    colors = mark_matrix(d.matrix[idx], guess)
    blocks: dict = {}
    for row, i in zip(colors, idx):
        m = tuple(int(c) for c in row)
        blocks[m] = blocks.get(m, 0) | (1 << i)
    return {m: FeasibleSet(d, bits) for m, bits in blocks.items()}


def refine(f: FeasibleSet, guess: Word, m: Marking) -> FeasibleSet:
    """Words of f whose re-marking of the guess equals m."""
    d = f.dictionary
    idx = f.indices()
    if not idx:
        return f
    target = np.asarray(m, dtype=np.uint8)
    rows = mark_matrix(d.matrix[idx], guess)
    keep = (rows == target[None, :]).all(axis=1)
    bits = 0
    for j, i in enumerate(idx):
        if keep[j]:
            bits |= 1 << i
    return FeasibleSet(d, bits)
