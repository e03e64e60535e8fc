import pytest
from hypothesis import given, settings, strategies as st

from graphmeasure import DomainError, IdentifierError, ParseError, UndefinedEndpointError
from graphmeasure.graph import shadowed
from graphmeasure.words import (
    EMPTY,
    Word,
    concat,
    enumerate_words,
    format_word,
    inverse,
    is_reduced,
    parse_word,
    power,
    reduce,
)

from conftest import random_cancel, random_graph, random_word, single_loop, tree, triangle


def test_endpoints(g_tree):
    w = parse_word("e1", g_tree)
    assert (w.source, w.range) == ("v1", "v2")
    with pytest.raises(UndefinedEndpointError):
        EMPTY.source


def test_concat_mismatch_is_empty(g_tree):
    e1, e2 = parse_word("e1", g_tree), parse_word("e2", g_tree)
    assert concat(e1, e2).is_empty
    assert (e1 * Word.at("v2")) == e1
    assert (Word.at("v1") * e1) == e1
    assert concat(EMPTY, e1).is_empty


def test_inadmissible_rejected(g_tree):
    with pytest.raises(DomainError):
        parse_word("e1.e2", g_tree)


def test_inverse_and_reduce(g_tree):
    w = parse_word("e1.e1^-1.e2", g_tree)
    assert reduce(w) == parse_word("e2", g_tree)
    assert reduce(parse_word("e1.e1^-1", g_tree)) == Word.at("v1")
    assert inverse(parse_word("e1^-1.e2", g_tree)) == parse_word("e2^-1.e1", g_tree)
    assert is_reduced(parse_word("e1^-1.e2", g_tree))


def test_powers():
    g = single_loop()
    l = parse_word("l", g)
    assert power(l, 3).length == 3
    assert power(l, -2) == parse_word("l^-1.l^-1", g)
    e1 = parse_word("e1", tree())
    assert power(e1, 2).is_empty
    with pytest.raises(DomainError):
        power(l, 0)


def test_parse_errors(g_tree):
    with pytest.raises(ParseError):
        parse_word("", g_tree)
    with pytest.raises(ParseError):
        parse_word("e1..e2", g_tree)
    with pytest.raises(IdentifierError):
        parse_word("zz", g_tree)


def test_format_round_trip(g_triangle):
    for w in enumerate_words(shadowed(g_triangle), 3):
        assert parse_word(format_word(w), g_triangle) == w
    assert format_word(EMPTY) == "<empty>"


def test_enumerate_words_counts(g_triangle):
    # one outgoing edge per vertex: 3 vertices + 3 words of each length
    assert len(enumerate_words(g_triangle, 4)) == 3 + 3 * 4


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(0, 12))
def test_reduce_idempotent_and_confluent(rng, length):
    g = shadowed(random_graph(rng, max_vertices=3, max_edges=3))
    w = random_word(g, rng, length)
    r = reduce(w)
    assert is_reduced(r) or r.is_vertex
    assert reduce(r) == r
    assert random_cancel(w, rng) == r


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(1, 8), st.integers(1, 8))
def test_reduce_respects_concat(rng, a, b):
    g = shadowed(triangle())
    u = random_word(g, rng, a)
    v = random_word(g, rng, b)
    uv = concat(u, v)
    if uv.is_empty:
        return
    assert reduce(uv) == reduce(concat(reduce(u), reduce(v)))
    assert reduce(concat(uv, inverse(uv))) == Word.at(uv.source)
