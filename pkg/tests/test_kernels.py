"""The compiled and pure-Python kernels must agree exactly."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from graphmeasure import _kernels_py as py
from graphmeasure._core import BACKEND
from graphmeasure.graph import shadowed

from conftest import random_graph

try:
    from graphmeasure import _kernels as cy
except ImportError:
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def tables(rng, **kw):
    g = shadowed(random_graph(rng, **kw))
    n, src, dst, codes, _, _ = g.kernel_tables()
    return n, src, dst, codes


def test_backend_selected():
    assert BACKEND == ("cython" if cy is not None and not os.environ.get("GRAPHMEASURE_PURE")
                       else "python")


def test_pure_override():
    out = subprocess.run(
        [sys.executable, "-c", "import graphmeasure; print(graphmeasure.BACKEND)"],
        env={**os.environ, "GRAPHMEASURE_PURE": "1"}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_reduce_codes():
    assert py.reduce_codes([0, 1, 2, 4, 5, 3]) == []
    assert py.reduce_codes([0, 2, 3, 1, 4]) == [4]
    assert py.trace_codes([4, 0, 4, 2, 0]) == [4, 0, 2]


@needs_ext
@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 7), max_size=30))
def test_reduce_parity(seq):
    assert list(cy.reduce_codes(seq)) == list(py.reduce_codes(seq))
    assert list(cy.trace_codes(seq)) == list(py.trace_codes(seq))


@needs_ext
@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_walks_and_closure_parity(rng):
    n, src, dst, codes = tables(rng, max_vertices=3, max_edges=3)
    assert [tuple(w) for w in cy.walks(n, src, dst, codes, 4)] == \
        [tuple(w) for w in py.walks(n, src, dst, codes, 4)]
    for reduced in (False, True):
        a = cy.closure(n, src, dst, codes, reduced, 200_000)
        b = py.closure(n, src, dst, codes, reduced, 200_000)
        if a is None or b is None:
            assert a is None and b is None
            continue
        assert sorted((s, r, tuple(t)) for s, r, t in a) == sorted((s, r, tuple(t)) for s, r, t in b)


@needs_ext
@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_find_trace_and_strata_parity(rng):
    n, src, dst, codes = tables(rng, max_vertices=4, max_edges=4)
    trace = py.trace_codes(py.reduce_codes([rng.choice(codes) for _ in range(3)]))
    s, t = rng.randrange(n), rng.randrange(n)
    for reduced in (False, True):
        a = cy.find_trace(n, src, dst, codes, s, t, tuple(trace), reduced)
        b = py.find_trace(n, src, dst, codes, s, t, tuple(trace), reduced)
        assert (a is None) == (b is None)
        if a is not None:
            assert len(a) == len(b)
        x = cy.stratum_counts(n, src, dst, codes, 4, [s], [t], reduced)
        y = py.stratum_counts(n, src, dst, codes, 4, [s], [t], reduced)
        assert [dict(k) for k in x] == [dict(k) for k in y]
