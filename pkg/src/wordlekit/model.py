"""Core value types: alphabets, words, dictionaries, markings, histories.

Symbols are interned to dense integer ids so the solver can index arrays
and bitsets directly.  A ``Word`` is simply a tuple of symbol ids and a
``Marking`` a tuple of color digits; both are plain tuples so they hash
fast and can be used as dict keys.  ``Alphabet`` and ``Dictionary`` are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateWord,
    EmptyDictionary,
    LengthMismatch,
    MarkingParseError,
    UnknownSymbol,
)

Word = tuple  # tuple[int, ...]: symbol ids, one per position
Marking = tuple  # tuple[int, ...]: one color digit per position
HistoryStep = tuple  # (guess: Word, marking: Marking)
History = Sequence  # Sequence[HistoryStep]


class MarkColor(enum.IntEnum):
    GRAY = 0
    YELLOW = 1
    GREEN = 2


# Plain ints for hot loops; equal to the MarkColor members.
GRAY, YELLOW, GREEN = 0, 1, 2

_DIGITS = "012"


class Alphabet:
    """Ordered list of distinct symbol names; ids are list positions."""

    __slots__ = ("symbols", "_index", "_single_char")

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise ValueError("alphabet needs at least one symbol")
        index: dict[str, int] = {}
        for i, name in enumerate(syms):
            if not name:
                raise ValueError("symbol names must be non-empty")
            if name in index:
                raise ValueError(f"duplicate symbol name {name!r}")
            index[name] = i
        self.symbols = syms
        self._index = index
        self._single_char = all(len(s) == 1 for s in syms)

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def foreign_id(self) -> int:
        """Id used for guess symbols outside the alphabet.

        Marking only ever compares secret letters against guess letters,
        never guess letters against each other, so one shared id for all
        foreign symbols changes nothing observable.
        """
        return len(self.symbols)

    def id_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownSymbol(f"symbol {name!r} not in alphabet") from None

    def encode(self, tokens: Sequence[str]) -> Word:
        return tuple(self.id_of(t) for t in tokens)

    def tokenize(self, text: str) -> list[str]:
        """Split word text: comma-separated tokens, or one symbol per char."""
        if "," in text:
            return text.split(",")
        if self._single_char:
            return list(text)
        raise UnknownSymbol(
            f"cannot read {text!r} against a multi-character alphabet "
            "without comma separators"
        )

    def encode_text(self, text: str) -> Word:
        return self.encode(self.tokenize(text))

    def encode_guess(self, text: str) -> Word:
        """Lenient encoding for externally played guesses.

        Unknown symbols map to ``foreign_id``: they can never match a
        dictionary word's letter, which is exactly the semantics of
        guessing a word with letters the dictionary does not use.
        """
        ids = []
        for tok in self.tokenize(text):
            ids.append(self._index.get(tok, self.foreign_id))
        return tuple(ids)

    def word_text(self, word: Word) -> str:
        names = [self.symbols[i] for i in word]
        if self._single_char:
            return "".join(names)
        return ",".join(names)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.symbols)!r})"


class Dictionary:
    """Non-empty set of distinct, equal-length words over one alphabet."""

    __slots__ = ("alphabet", "k", "words", "_index", "_matrix")

    def __init__(self, alphabet: Alphabet, words: Iterable[Word]):
        wordlist = tuple(tuple(w) for w in words)
        if not wordlist:
            raise EmptyDictionary("dictionary needs at least one word")
        k = len(wordlist[0])
        if k == 0:
            raise LengthMismatch("words must have positive length")
        sigma = alphabet.size
        index: dict[Word, int] = {}
        for w in wordlist:
            if len(w) != k:
                raise LengthMismatch(
                    f"word of length {len(w)} in a dictionary with k={k}"
                )
            for s in w:
                if not 0 <= s < sigma:
                    raise UnknownSymbol(f"symbol id {s} outside alphabet of size {sigma}")
            if w in index:
                raise DuplicateWord(f"duplicate word {alphabet.word_text(w)!r}")
            index[w] = len(index)
        self.alphabet = alphabet
        self.k = k
        self.words = wordlist
        self._index = index
        self._matrix: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: Word) -> bool:
        return tuple(word) in self._index

    def index_of(self, word: Word) -> int:
        return self._index[tuple(word)]

    @property
    def sigma(self) -> int:
        return self.alphabet.size

    @property
    def matrix(self) -> np.ndarray:
        """Word symbols as an (n, k) int16 array, built on first use."""
        if self._matrix is None:
            m = np.array(self.words, dtype=np.int16)
            m.setflags(write=False)
            self._matrix = m
        return self._matrix

    def word_text(self, i: int) -> str:
        return self.alphabet.word_text(self.words[i])

    def word_texts(self) -> list[str]:
        return [self.alphabet.word_text(w) for w in self.words]

    def __repr__(self) -> str:
        return f"Dictionary(k={self.k}, sigma={self.sigma}, words={len(self.words)})"


def parse_dictionary(text: str | bytes, fmt: str = "chars") -> Dictionary:
    """Parse a dictionary file: one word per line.

    ``chars``: every character is a symbol.  ``tokens``: symbols separated
    by commas.  The alphabet becomes the sorted set of distinct symbols
    encountered.  A single trailing newline is tolerated.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if fmt not in ("chars", "tokens"):
        raise ValueError(f"unknown dictionary format {fmt!r}")
    if not text.strip():
        raise EmptyDictionary("no words in input")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    rows: list[tuple[str, ...]] = []
    for line in lines:
        toks = tuple(line) if fmt == "chars" else tuple(line.split(","))
        if not toks or any(t == "" for t in toks):
            raise LengthMismatch(f"malformed line {line!r}")
        rows.append(toks)
    k = len(rows[0])
    for line, row in zip(lines, rows):
        if len(row) != k:
            raise LengthMismatch(
                f"line {line!r} has {len(row)} symbols, expected {k}"
            )
    alphabet = Alphabet(sorted({t for row in rows for t in row}))
    return Dictionary(alphabet, [alphabet.encode(row) for row in rows])


def serialize_dictionary(d: Dictionary, fmt: str = "chars") -> str:
    """Inverse of parse_dictionary; output ends with a newline."""
    if fmt == "chars":
        if not all(len(s) == 1 for s in d.alphabet.symbols):
            raise ValueError("chars format needs single-character symbols")
        lines = ["".join(d.alphabet.symbols[i] for i in w) for w in d.words]
    elif fmt == "tokens":
        lines = [",".join(d.alphabet.symbols[i] for i in w) for w in d.words]
    else:
        raise ValueError(f"unknown dictionary format {fmt!r}")
    return "\n".join(lines) + "\n"


def marking_to_digits(m: Marking) -> str:
    return "".join(_DIGITS[c] for c in m)


def parse_marking(text: str, k: int) -> Marking:
    if len(text) != k:
        raise MarkingParseError(f"marking {text!r} has length {len(text)}, expected {k}")
    try:
        return tuple(_DIGITS.index(ch) for ch in text)
    except ValueError:
        raise MarkingParseError(f"marking {text!r} contains a non-digit") from None


def relabel_dictionary(d: Dictionary, perm: Sequence[int]) -> Dictionary:
    """Apply a symbol-id permutation; names follow their ids."""
    if sorted(perm) != list(range(d.sigma)):
        raise ValueError("not a permutation of symbol ids")
    inv = [0] * d.sigma
    for i, p in enumerate(perm):
        inv[p] = i
    alphabet = Alphabet(d.alphabet.symbols[inv[j]] for j in range(d.sigma))
    return Dictionary(alphabet, [tuple(perm[s] for s in w) for w in d.words])
