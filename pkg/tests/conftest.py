import random
from fractions import Fraction

import pytest

from graphmeasure import MeasureContext, make_graph
from graphmeasure.words import Word

TREE_TEXT = """\
# three-vertex tree
vertex v1
vertex v2
vertex v3
edge e1 v1 v2
edge e2 v1 v3
"""

TRIANGLE_TEXT = """\
vertex v1
vertex v2
vertex v3
edge e1 v1 v2
edge e2 v2 v3
edge e3 v3 v1
"""


def tree():
    return make_graph(["v1", "v2", "v3"], [("e1", "v1", "v2"), ("e2", "v1", "v3")])


def triangle():
    return make_graph(["v1", "v2", "v3"],
                      [("e1", "v1", "v2"), ("e2", "v2", "v3"), ("e3", "v3", "v1")])


def single_loop(w=Fraction(1, 2)):
    return make_graph(["v"], [("l", "v", "v")], {"l": w})


def path3():
    return make_graph(["a", "b", "c"], [("p", "a", "b"), ("q", "b", "c")])


def two_cycle():
    return make_graph(["a", "b"], [("x", "a", "b"), ("y", "b", "a")],
                      {"x": Fraction(1, 3), "y": Fraction(3, 4)})


def loop_and_edge():
    return make_graph(["a", "b"], [("l", "a", "a"), ("f", "a", "b")], {"l": Fraction(1, 2)})


def random_graph(rng: random.Random, max_vertices=5, max_edges=7, min_edges=1):
    """Random multigraph, loops allowed, random weights in (0, 1]."""
    n = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(1, n + 1)]
    m = rng.randint(min_edges, max_edges)
    edges = [(f"e{i}", rng.choice(vs), rng.choice(vs)) for i in range(1, m + 1)]
    weights = {name: Fraction(rng.randint(1, 4), 4) for name, _, _ in edges}
    return make_graph(vs, edges, weights)


def random_tree(rng: random.Random, n_vertices: int):
    """Random oriented tree on ``n_vertices`` vertices."""
    vs = [f"v{i}" for i in range(1, n_vertices + 1)]
    edges = []
    for i in range(1, n_vertices):
        j = rng.randrange(i)
        a, b = vs[j], vs[i]
        if rng.random() < 0.5:
            a, b = b, a
        edges.append((f"e{i}", a, b))
    return make_graph(vs, edges)


def random_cancel(w: Word, rng: random.Random) -> Word:
    """Cancel adjacent inverse pairs in a random order until none remain."""
    edges = list(w.edges)
    while True:
        spots = [i for i in range(len(edges) - 1) if edges[i + 1] == ~edges[i]]
        if not spots:
            break
        i = rng.choice(spots)
        del edges[i:i + 2]
    return Word(edges=tuple(edges)) if edges else Word.at(w.source)


def random_word(g, rng, length):
    """Random admissible word over ``g`` biased towards backtracking."""
    cur = rng.choice(g.vertices)
    edges = []
    for _ in range(length):
        if edges and rng.random() < 0.4 and g.has_edge(~edges[-1]):
            e = ~edges[-1]
        else:
            out = [e for e in g.edges if e.source == cur]
            if not out:
                break
            e = rng.choice(out)
        edges.append(e)
        cur = e.target
    return Word(edges=tuple(edges)) if edges else Word.at(cur)


# Acceptance report lines, printed in the pytest terminal summary.
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# Small graphs whose full reduced diagram sets are cheap to enumerate.
TEST_GRAPHS = {
    "tree": tree,
    "triangle": triangle,
    "loop": single_loop,
    "path3": path3,
    "two_cycle": two_cycle,
    "loop_and_edge": loop_and_edge,
}


@pytest.fixture
def g_tree():
    return tree()


@pytest.fixture
def g_triangle():
    return triangle()


@pytest.fixture(params=sorted(TEST_GRAPHS))
def any_graph(request):
    return TEST_GRAPHS[request.param]()


@pytest.fixture
def ctx_tree():
    return MeasureContext(tree())


@pytest.fixture
def ctx_triangle():
    return MeasureContext(triangle())


@pytest.fixture
def graph_files(tmp_path):
    paths = {}
    for name, text in [("tree.g", TREE_TEXT), ("triangle.g", TRIANGLE_TEXT), ("empty.g", ""),
                       ("loop.g", "vertex v\nedge l v v weight 1/2\n")]:
        p = tmp_path / name
        p.write_text(text)
        paths[name] = p
    return paths
