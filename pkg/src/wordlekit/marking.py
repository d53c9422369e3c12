"""Feedback computation for a (secret, guess) pair.

The canonical form resolves greens first and then assigns yellows, which
is how the deployed game behaves and is well-defined for every pair.  A
single left-to-right pass that interleaves green and yellow assignment is
kept as a diagnostic: it can try to re-mark a position that an earlier
step already claimed, and ``mark_one_pass_literal`` reports that instead
of picking a resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import IncompatibleWords
from .model import GRAY, GREEN, YELLOW, MarkColor, Marking, Word


@dataclass(frozen=True)
class OnePassConflict:
    """A position the single pass tried to mark twice.

    The only reachable shape: an earlier step yellow-marked the position,
    a later step wants it green.
    """

    position: int  # 0-based index into the guess
    prior_color: MarkColor
    attempted_color: MarkColor


@dataclass(frozen=True)
class Transcript(Sequence):
    """Steps of a played game; behaves as a sequence of (guess, marking)."""

    steps: tuple  # tuple[tuple[Word, Marking], ...]
    won: bool

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, i):
        return self.steps[i]


def _check_pair(secret: Word, guess: Word) -> None:
    if len(secret) != len(guess):
        raise IncompatibleWords(
            f"secret length {len(secret)} vs guess length {len(guess)}"
        )


def mark(secret: Word, guess: Word) -> Marking:
    """Color the guess against the secret: greens first, then yellows.

    Yellows: walk secret positions left to right, skipping letters already
    consumed by a green match; each one claims the leftmost still-unmarked
    guess position holding that letter, if any.
    """
    _check_pair(secret, guess)
    k = len(secret)
    colors = [GRAY] * k
    for i in range(k):
        if secret[i] == guess[i]:
            colors[i] = GREEN
    for i in range(k):
        if secret[i] == guess[i]:
            continue
        c = secret[i]
        for j in range(k):
            if colors[j] == GRAY and guess[j] == c:
                colors[j] = YELLOW
                break
    return tuple(colors)


def mark_one_pass_literal(secret: Word, guess: Word) -> Union[Marking, OnePassConflict]:
    """Single left-to-right pass over secret positions.

    Each step either green-marks the same guess position or yellow-marks
    the leftmost unmarked guess position with the step's letter.  Returns
    the first conflict if a green lands on an already-yellow position;
    otherwise the result equals mark(secret, guess).
    """
    _check_pair(secret, guess)
    k = len(secret)
    colors = [GRAY] * k
    marked = [False] * k
    for i in range(k):
        if secret[i] == guess[i]:
            if marked[i]:
                return OnePassConflict(
                    position=i,
                    prior_color=MarkColor(colors[i]),
                    attempted_color=MarkColor.GREEN,
                )
            colors[i] = GREEN
            marked[i] = True
        else:
            c = secret[i]
            for j in range(k):
                if not marked[j] and guess[j] == c:
                    colors[j] = YELLOW
                    marked[j] = True
                    break
    return tuple(colors)


def simulate_game(secret: Word, guesses: Sequence[Word]) -> Transcript:
    """Replay guesses against a fixed secret, stopping at the first win."""
    steps = []
    won = False
    for g in guesses:
        m = mark(secret, g)
        steps.append((tuple(g), m))
        if all(c == GREEN for c in m):
            won = True
            break
    return Transcript(steps=tuple(steps), won=won)
