"""Finite directed multigraphs, shadows, subgraphs and isomorphisms.

Edges are *signed*: an :class:`Edge` either runs in its declared direction or
is the inverse of a declared edge.  Inverse edges print with the reserved
``^-1`` suffix, so the orientation of every edge of a shadowed graph can be
read back from its id.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from graphmeasure.errors import DomainError, IdentifierError, ParseError

INVERSE_MARKER = "^-1"

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True, order=True)
class Edge:
    """A signed edge.

    ``source`` and ``target`` are the endpoints *as traversed*: for an
    inverse edge they are the target and source of the declared edge.
    """

    name: str
    source: str
    target: str
    inverse: bool = False

    @property
    def id(self) -> str:
        return self.name + INVERSE_MARKER if self.inverse else self.name

    @property
    def is_loop(self) -> bool:
        return self.source == self.target

    def __invert__(self) -> Edge:
        return Edge(self.name, self.target, self.source, not self.inverse)

    def __str__(self) -> str:
        return self.id


# Backwards-readable alias: every edge of a shadowed graph is a signed edge.
SignedEdge = Edge


def _check_id(kind: str, ident: str) -> None:
    if not isinstance(ident, str) or not _ID_RE.match(ident):
        raise DomainError(f"invalid {kind} id {ident!r}")


def _as_weight(value) -> Fraction:
    w = Fraction(value)
    if not 0 < w <= 1:
        raise DomainError(f"edge weight {w} outside (0, 1]")
    return w


@dataclass(frozen=True)
class Graph:
    """Immutable finite directed multigraph with rational edge weights.

    Parameters
    ----------
    vertices : iterable of str
        Vertex ids in declaration order.
    edges : iterable of Edge
        Signed edges in declaration order.  Plain graphs only hold forward
        edges; shadows and shadowed graphs hold inverse edges as well.
    weights : mapping, optional
        Declared edge name -> weight in (0, 1].  Missing names default to 1.
        Inverse edges share the weight of their declared edge.
    """

    vertices: tuple
    edges: tuple
    weights: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple(self.edges)
        seen_v = set()
        for v in vertices:
            _check_id("vertex", v)
            if v in seen_v:
                raise DomainError(f"duplicate vertex id {v!r}")
            seen_v.add(v)
        seen_e = set()
        names = []
        for e in edges:
            if not isinstance(e, Edge):
                raise TypeError(f"expected Edge, got {type(e).__name__}")
            _check_id("edge", e.name)
            if e.id in seen_e:
                raise DomainError(f"duplicate edge id {e.id!r}")
            if e.name in seen_v:
                raise DomainError(f"id {e.name!r} used for both a vertex and an edge")
            for end in (e.source, e.target):
                if end not in seen_v:
                    raise IdentifierError(f"edge {e.id!r} has undeclared endpoint {end!r}")
            seen_e.add(e.id)
            if e.name not in names:
                names.append(e.name)
        weights = {}
        for name, w in dict(self.weights).items():
            if name not in names:
                raise IdentifierError(f"weight given for unknown edge {name!r}")
            weights[name] = _as_weight(w)
        for name in names:
            weights.setdefault(name, Fraction(1))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "weights", MappingProxyType(weights))
        object.__setattr__(self, "_names", tuple(names))
        object.__setattr__(self, "_by_id", {e.id: e for e in edges})

    def __hash__(self):
        return hash((self.vertices, self.edges, tuple(sorted(self.weights.items()))))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertices == other.vertices and self.edges == other.edges
                and dict(self.weights) == dict(other.weights))

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    @property
    def edge_names(self) -> tuple:
        """Declared edge names, in order of first appearance."""
        return self._names

    def edge(self, ident: str) -> Edge:
        try:
            return self._by_id[ident]
        except KeyError:
            raise IdentifierError(f"unknown edge {ident!r}") from None

    def has_edge(self, e: Edge) -> bool:
        return self._by_id.get(e.id) == e

    def weight(self, e: Edge | str) -> Fraction:
        name = e.name if isinstance(e, Edge) else e
        try:
            return self.weights[name]
        except KeyError:
            raise IdentifierError(f"unknown edge {name!r}") from None

    def check_vertex(self, v: str) -> None:
        if v not in self.vertices:
            raise IdentifierError(f"unknown vertex {v!r}")

    @property
    def is_shadowed(self) -> bool:
        return all(self.has_edge(~e) for e in self.edges)

    def forward_edges(self) -> tuple:
        return tuple(e for e in self.edges if not e.inverse)

    def inverse_edges(self) -> tuple:
        return tuple(e for e in self.edges if e.inverse)

    def edge_code(self, e: Edge) -> int:
        """Kernel code of a signed edge: ``2*i`` forward, ``2*i + 1`` inverse."""
        return 2 * self._names.index(e.name) + int(e.inverse)

    def kernel_tables(self):
        """``(n_vertices, src, dst, codes, vertex_index, code_to_edge)``."""
        vindex = {v: i for i, v in enumerate(self.vertices)}
        size = 2 * len(self._names)
        src = [-1] * size
        dst = [-1] * size
        by_code = {}
        for e in self.edges:
            c = self.edge_code(e)
            src[c] = vindex[e.source]
            dst[c] = vindex[e.target]
            by_code[c] = e
        return len(self.vertices), src, dst, sorted(by_code), vindex, by_code


def in_degree(g: Graph, v: str) -> int:
    g.check_vertex(v)
    return sum(1 for e in g.edges if e.target == v)


def out_degree(g: Graph, v: str) -> int:
    g.check_vertex(v)
    return sum(1 for e in g.edges if e.source == v)


def degree(g: Graph, v: str) -> int:
    # a loop is counted once as incoming and once as outgoing
    return in_degree(g, v) + out_degree(g, v)


def shadow(g: Graph) -> Graph:
    """Opposite graph: every edge reversed, weights kept."""
    return Graph(g.vertices, tuple(~e for e in g.edges), g.weights)


def shadowed(g: Graph) -> Graph:
    """Union of ``g`` and its shadow; idempotent."""
    edges = list(g.edges)
    present = {e.id for e in edges}
    for e in g.edges:
        if (~e).id not in present:
            edges.append(~e)
            present.add((~e).id)
    return Graph(g.vertices, tuple(edges), g.weights)


def full_subgraph(g: Graph, vs: Iterable[str]) -> Graph:
    keep = set(vs)
    for v in keep:
        g.check_vertex(v)
    edges = tuple(e for e in g.edges if e.source in keep and e.target in keep)
    names = {e.name for e in edges}
    return Graph(tuple(v for v in g.vertices if v in keep), edges,
                 {n: w for n, w in g.weights.items() if n in names})


def is_full_subgraph(h: Graph, g: Graph) -> bool:
    if not set(h.vertices) <= set(g.vertices):
        return False
    try:
        expected = full_subgraph(g, h.vertices)
    except IdentifierError:
        return False
    return (set(expected.edges) == set(h.edges)
            and all(h.weight(e) == g.weight(e) for e in h.edges))


@dataclass(frozen=True)
class Isomorphism:
    """Vertex bijection plus edge bijection between two graphs.

    ``edges`` maps each edge of the first graph to an edge of the second; when
    orientation reversal was allowed the image may be the inverse of a
    declared edge, but its endpoints always equal the images of the source's
    endpoints.
    """

    vertices: Mapping[str, str]
    edges: Mapping[Edge, Edge]

    def map_edge(self, e: Edge) -> Edge:
        if e in self.edges:
            return self.edges[e]
        return ~self.edges[~e]


def _signature(g: Graph, v: str, directed: bool):
    loops = sum(1 for e in g.edges if e.source == v and e.target == v)
    if directed:
        return (in_degree(g, v), out_degree(g, v), loops)
    return (degree(g, v), loops)


def _between(g: Graph, a: str, b: str, directed: bool) -> list:
    if directed:
        return [e for e in g.edges if e.source == a and e.target == b]
    return [e for e in g.edges
            if (e.source, e.target) == (a, b) or (e.source, e.target) == (b, a)]


def find_isomorphism(g1: Graph, g2: Graph, *, directed: bool = True,
                     edge_match: Callable[[Edge, Edge], bool] | None = None
                     ) -> Isomorphism | None:
    """Exhaustive backtracking search for a graph isomorphism.

    Vertices are tried in order of decreasing degree and candidates are pruned
    by degree signature and by edge multiplicities towards already mapped
    vertices.  With ``directed=False`` an edge may map onto a reversed edge,
    which is isomorphism of the shadowed graphs compatible with inversion.
    The first isomorphism in search order is returned.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    sig1 = {v: _signature(g1, v, directed) for v in g1.vertices}
    sig2 = {v: _signature(g2, v, directed) for v in g2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    order = sorted(g1.vertices, key=lambda v: (-sum(sig1[v][:2]), g1.vertices.index(v)))

    def multiplicity(g, a, b):
        return len(_between(g, a, b, directed))

    mapping: dict = {}
    used: set = set()

    def consistent(v, w):
        if multiplicity(g1, v, v) != multiplicity(g2, w, w):
            return False
        for u, x in mapping.items():
            if multiplicity(g1, v, u) != multiplicity(g2, w, x):
                return False
            if directed and multiplicity(g1, u, v) != multiplicity(g2, x, w):
                return False
        return True

    def assign_edges():
        result = {}
        done = set()
        for e in g1.edges:
            if e in done:
                continue
            a, b = e.source, e.target
            group = [f for f in _between(g1, a, b, directed) if f not in done]
            targets = _between(g2, mapping[a], mapping[b], directed)
            matched = _match_edges(group, targets, mapping, edge_match)
            if matched is None:
                return None
            result.update(matched)
            done.update(group)
        return result

    def search(i):
        if i == len(order):
            return assign_edges()
        v = order[i]
        for w in g2.vertices:
            if w in used or sig2[w] != sig1[v] or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            found = search(i + 1)
            if found is not None:
                return found
            del mapping[v]
            used.discard(w)
        return None

    edges = search(0)
    if edges is None:
        return None
    return Isomorphism(MappingProxyType(dict(mapping)), MappingProxyType(edges))


def _oriented(f: Edge, source: str, target: str) -> Edge:
    if f.source == source and f.target == target:
        return f
    return ~f


def _match_edges(group, targets, vmap, edge_match):
    if len(group) != len(targets):
        return None
    out = {}
    taken = [False] * len(targets)

    def go(i):
        if i == len(group):
            return True
        e = group[i]
        for j, f in enumerate(targets):
            if taken[j]:
                continue
            image = _oriented(f, vmap[e.source], vmap[e.target])
            if edge_match is not None and not edge_match(e, image):
                continue
            taken[j] = True
            out[e] = image
            if go(i + 1):
                return True
            taken[j] = False
            del out[e]
        return False

    return out if go(0) else None


# ---------------------------------------------------------------------------
# graph file format

def _format_weight(w: Fraction) -> str:
    return f"{w.numerator}/{w.denominator}"


def serialize_graph(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    for e in g.edges:
        if e.inverse:
            raise DomainError("only graphs of forward edges can be serialized")
        line = f"edge {e.name} {e.source} {e.target}"
        w = g.weight(e)
        if w != 1:
            line += f" weight {_format_weight(w)}"
        lines.append(line)
    return "\n".join(lines) + ("\n" if lines else "")


_WEIGHT_RE = re.compile(r"(\d+)(?:/(\d+))?\Z")


def parse_graph(text: str | bytes) -> Graph:
    """Parse the line-oriented graph format.

    ``vertex <id>`` and ``edge <id> <src> <dst> [weight <p>/<q>]`` lines;
    ``#`` starts a comment.  Errors carry 1-based line and column numbers.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"graph file is not UTF-8: {exc}") from None
    vertices: list = []
    edges: list = []
    weights: dict = {}
    ids: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        keyword, col = tokens[0]

        def ident(tok, kind):
            value, c = tok
            if not _ID_RE.match(value):
                raise ParseError(f"invalid {kind} id {value!r}", lineno, c)
            return value

        if keyword == "vertex":
            if len(tokens) != 2:
                raise ParseError("expected 'vertex <id>'", lineno, col)
            v = ident(tokens[1], "vertex")
            if v in ids:
                raise ParseError(f"duplicate id {v!r}", lineno, tokens[1][1])
            ids[v] = "vertex"
            vertices.append(v)
        elif keyword == "edge":
            if len(tokens) not in (4, 6):
                raise ParseError("expected 'edge <id> <src> <dst> [weight <p>/<q>]'",
                                 lineno, col)
            name = ident(tokens[1], "edge")
            if name in ids:
                raise ParseError(f"duplicate id {name!r}", lineno, tokens[1][1])
            ends = []
            for tok in tokens[2:4]:
                v = ident(tok, "vertex")
                if ids.get(v) != "vertex":
                    raise ParseError(f"unknown endpoint {v!r}", lineno, tok[1])
                ends.append(v)
            if len(tokens) == 6:
                kw, kc = tokens[4]
                if kw != "weight":
                    raise ParseError(f"expected 'weight', got {kw!r}", lineno, kc)
                value, vc = tokens[5]
                m = _WEIGHT_RE.match(value)
                if not m or (m.group(2) is not None and int(m.group(2)) == 0):
                    raise ParseError(f"malformed weight {value!r}", lineno, vc)
                w = Fraction(int(m.group(1)), int(m.group(2) or 1))
                if not 0 < w <= 1:
                    raise ParseError(f"weight {value} outside (0, 1]", lineno, vc)
                weights[name] = w
            ids[name] = "edge"
            edges.append(Edge(name, ends[0], ends[1]))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, col)
    return Graph(tuple(vertices), tuple(edges), weights)


def make_graph(vertices: Iterable[str], edges: Iterable[tuple], weights=None) -> Graph:
    """Build a plain graph from ``(name, source, target)`` triples."""
    return Graph(tuple(vertices), tuple(Edge(n, s, t) for n, s, t in edges),
                 dict(weights or {}))
