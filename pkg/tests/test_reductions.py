"""Gadget constructions and their instance file formats."""

import random

import pytest

from wordlekit.errors import DuplicateWord, NotFourRegular
from wordlekit.model import parse_dictionary, serialize_dictionary
from wordlekit.reductions import (
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


def test_set_family_validation():
    SetFamily(3, [{1, 2}, {2, 3}])
    with pytest.raises(ValueError):
        SetFamily(3, [{1, 2}])  # element 3 uncovered
    with pytest.raises(ValueError):
        SetFamily(2, [{1, 2, 3}])  # element outside universe
    with pytest.raises(ValueError):
        SetFamily(0, [set()])
    with pytest.raises(ValueError):
        SetFamily(1, [])


def test_set_family_json_round_trip():
    f = SetFamily(3, [{2, 3}, {1}])
    text = set_family_to_json(f)
    again = set_family_from_json(text)
    assert again.universe == 3
    assert again.sets == f.sets
    assert set_family_to_json(again) == text


def test_setcover_to_asc_examples():
    f = setcover_to_asc(SetFamily(3, [{1, 2}, {2, 3}]))
    assert f.universe == 6
    assert [sorted(s) for s in f.sets] == [[1, 2, 3, 4], [3, 4, 5, 6]]
    g = setcover_to_asc(SetFamily(1, [{1}]))
    assert g.universe == 2
    assert [sorted(s) for s in g.sets] == [[1, 2]]


def test_setcover_to_asc_shape_random():
    rng = random.Random(51)
    for _ in range(50):
        n = rng.randint(1, 6)
        sets = []
        covered = set()
        while covered != set(range(1, n + 1)):
            s = {rng.randint(1, n) for _ in range(rng.randint(1, n))}
            sets.append(frozenset(s))
            covered |= s
        f = SetFamily(n, sets)
        out = setcover_to_asc(f)
        assert out.universe == 2 * n
        assert len(out.sets) == len(f.sets)
        for before, after in zip(f.sets, out.sets):
            assert after == frozenset(
                x for u in before for x in (2 * u - 1, 2 * u)
            )


def test_asc_to_wordle_example():
    d, budget = asc_to_wordle(SetFamily(3, [{1, 2}, {2, 3}]), 1)
    assert budget == 2
    assert d.k == 3
    assert d.sigma == 5  # universe + two extra symbols
    assert serialize_dictionary(d, fmt="tokens") == (
        "1,s1,s1\ns2,1,s2\ns3,s3,1\n1,1,_\n_,1,1\n"
    )
    assert len(d) == 3 + 2


def test_asc_to_wordle_word_shapes():
    f = SetFamily(4, [{1, 4}, {2, 3}, {2}])
    d, _ = asc_to_wordle(f, 2)
    one = d.alphabet.id_of("1")
    bottom = d.alphabet.id_of("_")
    for i in range(4):  # element-words first
        w = d.words[i]
        assert sum(1 for s in w if s == one) == 1
        assert w[i] == one
        assert all(s == d.alphabet.id_of(f"s{i + 1}") for j, s in enumerate(w) if j != i)
    for w in d.words[4:]:  # then set-words
        assert set(w) <= {one, bottom}


def test_asc_to_wordle_collision_rejected():
    with pytest.raises(DuplicateWord):
        asc_to_wordle(SetFamily(1, [{1}]), 1)
    with pytest.raises(DuplicateWord):
        asc_to_wordle(SetFamily(2, [{1, 2}, {2, 1}]), 1)


def test_asc_to_wordle_budget_validation():
    with pytest.raises(ValueError):
        asc_to_wordle(SetFamily(2, [{1, 2}]), 0)


def test_graph_from_edges_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(0, [])


def test_graph_parse_serialize_round_trip():
    g = circulant_graph(7, (1, 2))
    text = serialize_graph(g)
    again = parse_graph(text)
    assert again == g
    assert serialize_graph(again) == text


def test_graph_parse_errors():
    with pytest.raises(ValueError):
        parse_graph("")
    with pytest.raises(ValueError):
        parse_graph("3\n1 2\n")
    with pytest.raises(ValueError):
        parse_graph("3 2\n1 2\n")  # header promises two edges
    with pytest.raises(ValueError):
        parse_graph("3 1\n1 2 3\n")


def test_complete_and_circulant_shapes():
    k5 = complete_graph(5)
    assert all(k5.degree(v) == 4 for v in range(1, 6))
    assert k5.neighbors(1) == (2, 3, 4, 5)
    c7 = circulant_graph(7, (1, 2))
    assert all(c7.degree(v) == 4 for v in range(1, 8))
    assert c7.neighbors(1) == (2, 3, 6, 7)
    assert c7.neighbors(4) == (2, 3, 5, 6)


def test_graph_to_wordle_requires_four_regular():
    path = Graph.from_edges(3, [(1, 2), (2, 3)])
    with pytest.raises(NotFourRegular) as e:
        graph_to_wordle(path)
    assert e.value.vertex == 1
    assert e.value.degree == 1


def test_graph_to_wordle_k5():
    d = graph_to_wordle(complete_graph(5))
    assert len(d) == 10
    assert d.k == 5
    assert d.sigma == 5
    texts = [",".join(d.alphabet.symbols[s] for s in w) for w in d.words]
    assert texts[0] == "1,2,3,4,5"
    assert texts[5] == "1,1,1,1,1"


def test_graph_to_wordle_structure():
    d = graph_to_wordle(circulant_graph(7, (1, 2)))
    assert len(d) == 14
    firsts = [w[0] for w in d.words]
    for v in range(7):
        assert firsts.count(v) == 2
    for w in d.words[7:]:
        assert len(set(w)) == 1
    # neighbor symbols ascend within every vertex word
    for w in d.words[:7]:
        assert list(w[1:]) == sorted(w[1:])


def test_generated_dictionaries_token_round_trip():
    instances = [
        graph_to_wordle(complete_graph(5)),
        graph_to_wordle(circulant_graph(8, (1, 2))),
        asc_to_wordle(SetFamily(3, [{1, 2}, {2, 3}]), 1)[0],
        asc_to_wordle(SetFamily(4, [{1, 2, 3, 4}, {2}, {3, 4}]), 2)[0],
    ]
    for d in instances:
        text = serialize_dictionary(d, fmt="tokens")
        again = parse_dictionary(text, fmt="tokens")
        assert serialize_dictionary(again, fmt="tokens") == text
        assert again.k == d.k and len(again) == len(d)
