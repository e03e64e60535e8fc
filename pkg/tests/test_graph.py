from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from graphmeasure import Edge, ParseError, DomainError, IdentifierError
from graphmeasure.graph import (
    degree,
    find_isomorphism,
    full_subgraph,
    in_degree,
    is_full_subgraph,
    make_graph,
    out_degree,
    parse_graph,
    serialize_graph,
    shadow,
    shadowed,
)

from conftest import TREE_TEXT, random_graph, tree, triangle


def test_degrees_tree(g_tree):
    assert in_degree(g_tree, "v1") == 0
    assert out_degree(g_tree, "v1") == 2
    assert degree(shadowed(g_tree), "v1") == 4
    assert degree(shadowed(g_tree), "v2") == 2


def test_triangle_in_degree(g_triangle):
    assert in_degree(g_triangle, "v1") == 1


def test_loop_counts_twice():
    g = make_graph(["v"], [("l", "v", "v")])
    assert degree(g, "v") == 2
    assert degree(shadowed(g), "v") == 4


def test_shadow_reverses(g_tree):
    s = shadow(g_tree)
    pairs = {(e.id, e.source, e.target) for e in s.edges}
    assert pairs == {("e1^-1", "v2", "v1"), ("e2^-1", "v3", "v1")}


def test_shadowed_has_both_orientations(g_tree):
    s = shadowed(g_tree)
    assert len(s.edges) == 4
    assert shadowed(s) == s
    assert s.weight(s.edge("e1^-1")) == s.weight(s.edge("e1"))


def test_edge_inverse_involution():
    e = Edge("e", "a", "b")
    assert ~~e == e
    assert (~e).id == "e^-1"
    assert (~e).source == "b"


def test_weights_range():
    with pytest.raises(DomainError):
        make_graph(["a"], [("l", "a", "a")], {"l": 0})
    with pytest.raises(DomainError):
        make_graph(["a"], [("l", "a", "a")], {"l": Fraction(3, 2)})
    g = make_graph(["a"], [("l", "a", "a")], {"l": 1})
    assert g.weight("l") == 1


def test_unknown_endpoint_rejected():
    with pytest.raises((DomainError, IdentifierError)):
        make_graph(["a"], [("e", "a", "b")])


def test_full_subgraph(g_triangle):
    h = full_subgraph(g_triangle, ["v1", "v2"])
    assert [e.name for e in h.edges] == ["e1"]
    assert is_full_subgraph(h, g_triangle)
    partial = make_graph(["v1", "v2"], [])
    assert not is_full_subgraph(partial, g_triangle)


def test_parse_serialize_round_trip():
    g = parse_graph(TREE_TEXT)
    assert g == tree()
    assert parse_graph(serialize_graph(g)) == g
    w = make_graph(["a", "b"], [("x", "a", "b")], {"x": Fraction(2, 3)})
    assert "weight 2/3" in serialize_graph(w)
    assert parse_graph(serialize_graph(w)) == w


@pytest.mark.parametrize("text, line", [
    ("vertex a\nnode b\n", 2),
    ("vertex a\nvertex a\n", 2),
    ("vertex a\nedge e a b\n", 2),
    ("vertex a\nedge e a a weight 2/1\n", 2),
    ("vertex a\nedge e a a weight x\n", 2),
    ("vertex a-b\n", 1),
])
def test_parse_errors_carry_position(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert info.value.column is not None


def test_isomorphism_tree_vs_triangle():
    assert find_isomorphism(tree(), triangle()) is None


def test_isomorphism_relabel():
    g = triangle()
    h = make_graph(["a", "b", "c"], [("x", "b", "c"), ("y", "c", "a"), ("z", "a", "b")])
    iso = find_isomorphism(g, h)
    assert iso is not None
    for e in g.edges:
        f = iso.map_edge(e)
        assert (iso.vertices[e.source], iso.vertices[e.target]) == (f.source, f.target)


def test_isomorphism_undirected_matches_shadow(g_tree):
    assert find_isomorphism(g_tree, shadow(g_tree)) is None
    assert find_isomorphism(g_tree, shadow(g_tree), directed=False) is not None


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_random_round_trip(rng):
    g = random_graph(rng)
    assert parse_graph(serialize_graph(g)) == g
    assert find_isomorphism(g, g) is not None


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_handshake(rng):
    g = random_graph(rng)
    assert sum(degree(g, v) for v in g.vertices) == 2 * len(g.edges)
    assert sum(in_degree(g, v) for v in g.vertices) == len(g.edges)
