"""Dictionary parsing, alphabets, and marking digit strings."""

import random

import pytest

from wordlekit.errors import (
    DuplicateWord,
    EmptyDictionary,
    LengthMismatch,
    MarkingParseError,
    UnknownSymbol,
)
from wordlekit.model import (
    Alphabet,
    Dictionary,
    MarkColor,
    marking_to_digits,
    parse_dictionary,
    parse_marking,
    relabel_dictionary,
    serialize_dictionary,
)


def test_parse_chars_basic():
    d = parse_dictionary("ABBEY\nKEBAB\nHIPPY\n")
    assert d.k == 5
    assert len(d) == 3
    assert d.sigma == 8
    assert d.alphabet.symbols == ("A", "B", "E", "H", "I", "K", "P", "Y")
    assert d.word_texts() == ["ABBEY", "KEBAB", "HIPPY"]


def test_parse_single_word_single_symbol():
    d = parse_dictionary("AA\n")
    assert d.k == 2
    assert d.sigma == 1
    assert d.words == ((0, 0),)


def test_parse_tokens():
    d = parse_dictionary("s1,_,s1\n_,_,s2\n", fmt="tokens")
    assert d.k == 3
    assert d.alphabet.symbols == ("_", "s1", "s2")
    assert d.word_texts() == ["s1,_,s1", "_,_,s2"]


def test_parse_length_mismatch():
    with pytest.raises(LengthMismatch):
        parse_dictionary("v1,v2\nv1,v1\nv1,v2,v3\n", fmt="tokens")


def test_parse_duplicate_word():
    with pytest.raises(DuplicateWord):
        parse_dictionary("AB\nCD\nAB\n")


def test_parse_empty_input():
    with pytest.raises(EmptyDictionary):
        parse_dictionary("")
    with pytest.raises(EmptyDictionary):
        parse_dictionary("\n")


def test_parse_malformed_tokens_line():
    with pytest.raises(LengthMismatch):
        parse_dictionary("a,,b\na,c,b\n", fmt="tokens")


def test_serialize_round_trip_chars():
    text = "ABBEY\nKEBAB\nHIPPY\n"
    d = parse_dictionary(text)
    assert serialize_dictionary(d) == text
    assert parse_dictionary(serialize_dictionary(d)).words == d.words


def test_serialize_round_trip_tokens():
    text = "s1,_,s1\n_,_,s2\n"
    d = parse_dictionary(text, fmt="tokens")
    assert serialize_dictionary(d, fmt="tokens") == text


def test_serialize_tokens_format_always_available():
    d = parse_dictionary("AB\nBA\n")
    assert serialize_dictionary(d, fmt="tokens") == "A,B\nB,A\n"


def test_chars_serialization_rejected_for_long_symbols():
    d = parse_dictionary("s1,s2\n", fmt="tokens")
    with pytest.raises(ValueError):
        serialize_dictionary(d, fmt="chars")


def test_alphabet_strict_and_lenient_encoding():
    a = Alphabet("ABC")
    assert a.encode_text("CAB") == (2, 0, 1)
    with pytest.raises(UnknownSymbol):
        a.encode_text("ABZ")
    assert a.encode_guess("ABZ") == (0, 1, a.foreign_id)
    assert a.encode_guess("ZZQ") == (3, 3, 3)


def test_alphabet_rejects_duplicates_and_empties():
    with pytest.raises(ValueError):
        Alphabet(["A", "A"])
    with pytest.raises(ValueError):
        Alphabet(["A", ""])
    with pytest.raises(ValueError):
        Alphabet([])


def test_dictionary_rejects_foreign_ids():
    a = Alphabet("AB")
    with pytest.raises(UnknownSymbol):
        Dictionary(a, [(0, 2)])


def test_dictionary_matrix_matches_words():
    d = parse_dictionary("ABBEY\nKEBAB\n")
    m = d.matrix
    assert m.shape == (2, 5)
    assert [tuple(row) for row in m] == list(d.words)
    with pytest.raises(ValueError):
        m[0, 0] = 3  # read-only


def test_marking_digits():
    assert marking_to_digits((2, 0, 0, 0, 1)) == "20001"
    m = (MarkColor.GREEN, MarkColor.GRAY, MarkColor.GRAY, MarkColor.GRAY, MarkColor.YELLOW)
    assert marking_to_digits(m) == "20001"
    assert parse_marking("22222", 5) == (2, 2, 2, 2, 2)
    assert marking_to_digits(parse_marking("01210", 5)) == "01210"


def test_parse_marking_errors():
    with pytest.raises(MarkingParseError):
        parse_marking("2021", 5)
    with pytest.raises(MarkingParseError):
        parse_marking("20301", 5)
    with pytest.raises(MarkingParseError):
        parse_marking("2021x", 5)


def test_parse_marking_round_trip_random():
    rng = random.Random(7)
    for _ in range(200):
        k = rng.randint(1, 8)
        m = tuple(rng.randrange(3) for _ in range(k))
        assert parse_marking(marking_to_digits(m), k) == m


def test_relabel_dictionary_permutes_consistently():
    d = parse_dictionary("AB\nBA\nAA\n")
    r = relabel_dictionary(d, [1, 0])
    assert r.alphabet.symbols == ("B", "A")
    assert r.word_texts() == d.word_texts()
    assert r.words == ((1, 0), (0, 1), (1, 1))
    with pytest.raises(ValueError):
        relabel_dictionary(d, [0, 0])


def test_index_and_contains():
    d = parse_dictionary("ABBEY\nKEBAB\nHIPPY\n")
    assert (d.words[1] in d) and d.index_of(d.words[1]) == 1
    assert (9, 9, 9, 9, 9) not in d
