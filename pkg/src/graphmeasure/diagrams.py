"""Diagrams and reduced diagrams of words, and exact diagram-set enumeration.

The diagram of a path is its first-traversal trace: the source, the range and
the distinct signed edges in the order they are first used.  Repeating an
edge adds nothing, so ``l.l`` and ``l`` share a diagram for a loop edge ``l``.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

from graphmeasure._core import kernels
from graphmeasure.errors import DiagramSetTooLarge, DomainError, ParseError
from graphmeasure.graph import Graph
from graphmeasure.words import Word, enumerate_words, reduce, signed_edge

DEFAULT_LIMIT = 2_000_000


@dataclass(frozen=True)
class Diagram:
    source: str
    range: str
    trace: tuple = ()

    def __post_init__(self):
        trace = tuple(self.trace)
        if len(set(trace)) != len(trace):
            raise DomainError("a diagram trace cannot repeat a signed edge")
        if not trace and self.source != self.range:
            raise DomainError("a vertex diagram has equal source and range")
        if trace and trace[0].source != self.source:
            raise DomainError("trace does not start at the diagram source")
        object.__setattr__(self, "trace", trace)

    @classmethod
    def of_vertex(cls, v: str) -> Diagram:
        return cls(v, v, ())

    @property
    def length(self) -> int:
        return len(self.trace)

    @property
    def is_vertex(self) -> bool:
        return not self.trace

    @property
    def is_loop(self) -> bool:
        return bool(self.trace) and self.source == self.range

    @property
    def is_admissible(self) -> bool:
        """Whether the trace, read as a word, runs from source to range."""
        if not self.trace:
            return True
        t = self.trace
        return (all(a.target == b.source for a, b in zip(t, t[1:]))
                and t[-1].target == self.range)

    def as_word(self) -> Word | None:
        if not self.trace:
            return Word.at(self.source)
        if not self.is_admissible:
            return None
        return Word(edges=self.trace)

    def edge_names(self) -> set:
        return {e.name for e in self.trace}

    def __str__(self):
        return format_diagram(self)


def format_diagram(d: Diagram) -> str:
    return f"{d.source} -> {d.range} : {'.'.join(e.id for e in d.trace)}".rstrip()


_DIAGRAM_RE = re.compile(r"\s*(\S+)\s*->\s*(\S+)\s*:\s*(\S*)\s*\Z")


def parse_diagram(text: str, g: Graph) -> Diagram:
    """Inverse of :func:`format_diagram`."""
    m = _DIAGRAM_RE.match(text)
    if not m:
        raise ParseError(f"malformed diagram line {text!r}")
    source, target, trace = m.groups()
    g.check_vertex(source)
    g.check_vertex(target)
    edges = tuple(signed_edge(g, tok) for tok in trace.split(".")) if trace else ()
    return Diagram(source, target, edges)


def diagram(w: Word) -> Diagram:
    if w.is_empty:
        raise DomainError("the empty word has no diagram")
    if w.is_vertex:
        return Diagram.of_vertex(w.vertex)
    seen = set()
    trace = []
    for e in w.edges:
        if e not in seen:
            seen.add(e)
            trace.append(e)
    return Diagram(w.source, w.range, tuple(trace))


def is_basic(w: Word) -> bool:
    if w.is_empty:
        raise DomainError("the empty word has no diagram")
    return len(set(w.edges)) == len(w.edges)


def reduced_diagram(w: Word) -> Diagram:
    return diagram(reduce(w))


def diagram_key(g: Graph, d: Diagram):
    return (d.length, tuple(g.edge_code(e) for e in d.trace),
            g.vertices.index(d.source), g.vertices.index(d.range))


class DiagramSet:
    """Finite ordered set of diagrams, partitioned by length."""

    def __init__(self, graph: Graph, diagrams: Iterable[Diagram]):
        self.graph = graph
        self.diagrams = tuple(sorted(set(diagrams), key=lambda d: diagram_key(graph, d)))
        self._members = frozenset(self.diagrams)

    def __iter__(self) -> Iterator[Diagram]:
        return iter(self.diagrams)

    def __len__(self):
        return len(self.diagrams)

    def __contains__(self, d):
        return d in self._members

    def __eq__(self, other):
        if isinstance(other, DiagramSet):
            return self._members == other._members
        return NotImplemented

    def __repr__(self):
        return f"DiagramSet({len(self)} diagrams)"

    def as_set(self) -> frozenset:
        return self._members

    @property
    def by_length(self) -> dict:
        cells = defaultdict(list)
        for d in self.diagrams:
            cells[d.length].append(d)
        return dict(cells)

    @property
    def vertices(self) -> tuple:
        return tuple(d for d in self.diagrams if d.is_vertex)

    @property
    def paths(self) -> tuple:
        return tuple(d for d in self.diagrams if not d.is_vertex)

    def with_endpoints(self, source=None, range=None) -> tuple:
        return tuple(d for d in self.diagrams
                     if (source is None or d.source == source)
                     and (range is None or d.range == range))

    def to_json(self) -> str:
        payload = {
            "diagrams": [format_diagram(d) for d in self.diagrams],
            "by_length": {str(k): [format_diagram(d) for d in v]
                          for k, v in self.by_length.items()},
        }
        return json.dumps(payload, sort_keys=True, ensure_ascii=False)


def _closure(g: Graph, reduced: bool, limit: int | None) -> list:
    n, src, dst, codes, _, by_code = g.kernel_tables()
    found = [Diagram.of_vertex(v) for v in g.vertices]
    if not codes:
        return found
    cap = DEFAULT_LIMIT if limit is None else limit
    raw = kernels.closure(n, src, dst, codes, reduced, cap)
    if raw is None:
        raise DiagramSetTooLarge(
            f"diagram enumeration exceeded {cap} search states; "
            "use generator mode or raise the limit")
    for s, r, trace in raw:
        found.append(Diagram(g.vertices[s], g.vertices[r],
                             tuple(by_code[c] for c in trace)))
    return found


def enumerate_diagrams(g: Graph, *, limit: int | None = None) -> DiagramSet:
    """Exact diagram set of ``g``: vertices plus every trace of every path.

    Computed as the reachable states (source, current vertex, trace) of the
    trace automaton, which is finite even when the word set is not.
    """
    return DiagramSet(g, _closure(g, False, limit))


def enumerate_reduced_diagrams(g_shadowed: Graph, *, limit: int | None = None) -> DiagramSet:
    """Exact reduced diagram set of a shadowed graph.

    Every reduced diagram is the trace of a cancellation-free word, so the
    automaton only walks non-backtracking steps.
    """
    return DiagramSet(g_shadowed, _closure(g_shadowed, True, limit))


def generator_diagrams(g: Graph) -> DiagramSet:
    """Vertex diagrams and single-edge diagrams only (length at most one)."""
    found = [Diagram.of_vertex(v) for v in g.vertices]
    found += [Diagram(e.source, e.target, (e,)) for e in g.edges]
    return DiagramSet(g, found)


def find_witness(g: Graph, d: Diagram, *, reduced: bool = False) -> Word | None:
    """A shortest word over ``g`` whose (reduced) diagram is ``d``, or None."""
    if d.is_vertex:
        return Word.at(d.source) if d.source in g.vertices else None
    if d.source not in g.vertices or d.range not in g.vertices:
        return None
    if not all(g.has_edge(e) for e in d.trace):
        return None
    n, src, dst, codes, vindex, by_code = g.kernel_tables()
    trace = tuple(g.edge_code(e) for e in d.trace)
    seq = kernels.find_trace(n, src, dst, codes, vindex[d.source], vindex[d.range],
                             trace, reduced)
    if seq is None:
        return None
    return Word(edges=tuple(by_code[c] for c in seq))


def is_member(g: Graph, d: Diagram, *, reduced: bool = False) -> bool:
    """Membership in the (reduced) diagram set without enumerating it."""
    return find_witness(g, d, reduced=reduced) is not None


def tree_coincidence_check(g: Graph, max_len: int) -> bool:
    """True iff every word of length at most ``max_len`` is basic."""
    return all(is_basic(w) for w in enumerate_words(g, max_len))


def sweep_diagrams(g: Graph, max_len: int, *, reduced: bool = False) -> set:
    """Brute-force image of the (reduced) diagram map over enumerated words."""
    fn = reduced_diagram if reduced else diagram
    return {fn(w) for w in enumerate_words(g, max_len)}
