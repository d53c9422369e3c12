"""Exception hierarchy shared by all wordlekit modules."""


class WordleKitError(Exception):
    """Base class for all errors raised by this package."""


class LengthMismatch(WordleKitError):
    """Words of different lengths in one dictionary, or a malformed word."""


class DuplicateWord(WordleKitError):
    """The same word appears twice in a dictionary."""


class EmptyDictionary(WordleKitError):
    """A dictionary needs at least one word."""


class UnknownSymbol(WordleKitError):
    """A word uses a symbol that is not part of the alphabet."""


class MarkingParseError(WordleKitError):
    """A marking digit string has the wrong length or a foreign character."""


class IncompatibleWords(WordleKitError):
    """Secret and guess cannot be compared (different lengths)."""


class EmptyFeasibleSet(WordleKitError):
    """A policy was asked to guess with no feasible words left."""


class BudgetExceeded(WordleKitError):
    """The solver hit its node budget; the answer is unknown, not 'no'."""


class CapExceeded(WordleKitError):
    """A brute-force oracle was handed an instance above its size cap."""


class NotFourRegular(WordleKitError):
    """The graph-to-dictionary construction needs a 4-regular graph."""

    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 4")
        self.vertex = vertex
        self.degree = degree
