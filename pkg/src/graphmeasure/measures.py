"""Degree, diagram-length and graph measures on diagram and word sets.

All values are exact :class:`fractions.Fraction` objects.  A measure of a set
splits into a vertex part (degrees over the vertex count) and a path part
(weight times length of each diagram).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from graphmeasure.diagrams import (
    Diagram,
    DiagramSet,
    enumerate_diagrams,
    enumerate_reduced_diagrams,
    format_diagram,
    generator_diagrams,
    is_member,
    reduced_diagram,
)
from graphmeasure.errors import DomainError
from graphmeasure.graph import Graph, degree, find_isomorphism, is_full_subgraph, shadowed
from graphmeasure.words import Word, format_word

FULL = "full"
GENERATOR = "generator"
_MODES = (FULL, GENERATOR)


@dataclass(frozen=True)
class MeasureValue:
    """A measure split into its vertex and path contributions."""

    vertex_part: Fraction
    path_part: Fraction

    @property
    def total(self) -> Fraction:
        return self.vertex_part + self.path_part

    def to_dict(self, members=()) -> dict:
        return {
            "set": [format_member(m) for m in members],
            "vertex_part": format_fraction(self.vertex_part),
            "path_part": format_fraction(self.path_part),
            "total": format_fraction(self.total),
        }

    def to_json(self, members=()) -> str:
        return json.dumps(self.to_dict(members), sort_keys=True, ensure_ascii=False)


def format_fraction(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_member(m) -> str:
    if isinstance(m, Word):
        return format_word(m)
    if m.is_vertex:
        return m.source
    w = m.as_word()
    return format_word(w) if w is not None else format_diagram(m)


@dataclass(frozen=True)
class MeasureContext:
    """Everything a measure evaluation depends on.

    Parameters
    ----------
    graph : Graph
        The original graph ``G``; measures on ``G^`` use ``shadowed(graph)``.
    weighted : bool
        When False every edge weight counts as 1.
    mode : {"full", "generator"}
        ``"generator"`` restricts every diagram set to diagrams of length at
        most one.
    degrees : {"shadowed", "forward"}
        Graph in which vertex degrees are counted for the measure on D(G).
        The measures on the shadowed graph always count in ``G^``.
    limit : int, optional
        State limit for exact enumeration of full diagram sets.
    """

    graph: Graph
    weighted: bool = False
    mode: str = FULL
    degrees: str = "shadowed"
    limit: int | None = None

    def __post_init__(self):
        if self.mode not in _MODES:
            raise DomainError(f"unknown diagram mode {self.mode!r}")
        if self.degrees not in ("shadowed", "forward"):
            raise DomainError(f"unknown degree convention {self.degrees!r}")

    @cached_property
    def shadowed(self) -> Graph:
        return shadowed(self.graph)

    @cached_property
    def diagram_set(self) -> DiagramSet:
        """D(G) under the active mode."""
        if self.mode == GENERATOR:
            return generator_diagrams(self.graph)
        return enumerate_diagrams(self.graph, limit=self.limit)

    @cached_property
    def reduced_diagram_set(self) -> DiagramSet:
        """D_r(G^) under the active mode."""
        if self.mode == GENERATOR:
            return generator_diagrams(self.shadowed)
        return enumerate_reduced_diagrams(self.shadowed, limit=self.limit)

    @cached_property
    def loops(self) -> tuple:
        return tuple(d for d in self.reduced_diagram_set if d.is_loop)

    def weight_of(self, e) -> Fraction:
        return self.graph.weight(e) if self.weighted else Fraction(1)

    def in_reduced_domain(self, d: Diagram) -> bool:
        if self.mode == GENERATOR:
            return d.length <= 1 and d in self.reduced_diagram_set
        if "reduced_diagram_set" in self.__dict__:
            return d in self.reduced_diagram_set
        return is_member(self.shadowed, d, reduced=True)

    def in_domain(self, d: Diagram) -> bool:
        if self.mode == GENERATOR:
            return d.length <= 1 and d in self.diagram_set
        if "diagram_set" in self.__dict__:
            return d in self.diagram_set
        return is_member(self.graph, d, reduced=False)

    def with_mode(self, mode: str) -> MeasureContext:
        return MeasureContext(self.graph, self.weighted, mode, self.degrees, self.limit)


def _vertex_degree(ctx: MeasureContext, v: str, forward: bool = False) -> int:
    g = ctx.graph if forward else ctx.shadowed
    return degree(g, v)


def degree_measure(ctx: MeasureContext, vertices: Iterable[str], *, forward: bool = False) -> Fraction:
    """Sum of deg(v)/|V| over a vertex set, degrees counted in ``G^``."""
    vs = set(vertices)
    n = len(ctx.graph.vertices)
    for v in vs:
        ctx.graph.check_vertex(v)
    return sum((Fraction(_vertex_degree(ctx, v, forward), n) for v in vs), Fraction(0))


def diagram_length(diagrams: Iterable[Diagram]) -> int:
    """Total length of a diagram set."""
    return sum(d.length for d in set(diagrams))


def weight(ctx: MeasureContext, d: Diagram) -> Fraction:
    """Product of edge weights along the trace (1 for vertex diagrams)."""
    out = Fraction(1)
    for e in d.trace:
        out *= ctx.weight_of(e)
    return out


def weighted_length(ctx: MeasureContext, diagrams: Iterable[Diagram]) -> Fraction:
    """Sum of weight times length; equals the total length when unweighted."""
    return sum((weight(ctx, d) * d.length for d in set(diagrams)), Fraction(0))


def _split(diagrams: Iterable[Diagram]):
    ds = set(diagrams)
    return {d.source for d in ds if d.is_vertex}, {d for d in ds if not d.is_vertex}


def _check(ctx, diagrams, member, what):
    for d in diagrams:
        if not isinstance(d, Diagram):
            raise DomainError(f"expected a Diagram, got {type(d).__name__}")
        if not member(d):
            raise DomainError(f"{format_member(d)} is not in {what}")


def measure_diagram_space(ctx: MeasureContext, diagrams: Iterable[Diagram]) -> MeasureValue:
    """The measure on D(G): degree part plus weighted-length part."""
    ds = set(diagrams)
    _check(ctx, ds, ctx.in_domain, "D(G)")
    vs, paths = _split(ds)
    return MeasureValue(degree_measure(ctx, vs, forward=ctx.degrees == "forward"),
                        weighted_length(ctx, paths))


def mu_G(ctx: MeasureContext, diagrams: Iterable[Diagram]) -> Fraction:
    return measure_diagram_space(ctx, diagrams).total


def measure_reduced_space(ctx: MeasureContext, diagrams: Iterable[Diagram]) -> MeasureValue:
    """The measure on D_r(G^): degree part plus weighted-length part."""
    ds = set(diagrams)
    _check(ctx, ds, ctx.in_reduced_domain, "D_r(G^)")
    vs, paths = _split(ds)
    return MeasureValue(degree_measure(ctx, vs), weighted_length(ctx, paths))


def mu_shadowed(ctx: MeasureContext, diagrams: Iterable[Diagram]) -> Fraction:
    return measure_reduced_space(ctx, diagrams).total


def total_measure(ctx: MeasureContext) -> Fraction:
    return mu_shadowed(ctx, ctx.reduced_diagram_set)


def _supported_in(h: Graph, d: Diagram) -> bool:
    if d.is_vertex:
        return d.source in h.vertices
    names = set(h.edge_names)
    return d.edge_names() <= names


def subgraph_measure(ctx: MeasureContext, h: Graph, diagrams: Iterable[Diagram], *,
                     strict: bool = False) -> MeasureValue:
    """Measure of a set with respect to the full subgraph ``h``.

    The default follows the subgraph definition literally: degrees counted in
    ``h^`` over ``|V(h)|`` plus the weighted length of diagrams supported in
    ``h``.  ``strict=True`` instead restricts the ambient measure to the
    reduced diagrams of ``h^``.
    """
    if not is_full_subgraph(h, ctx.graph):
        raise DomainError("not a full subgraph of the context graph")
    ds = set(diagrams)
    _check(ctx, ds, ctx.in_reduced_domain, "D_r(G^)")
    inside = {d for d in ds if _supported_in(h, d)}
    if strict:
        return measure_reduced_space(ctx, inside)
    vs, paths = _split(inside)
    hs = shadowed(h)
    n = len(h.vertices)
    vertex_part = sum((Fraction(degree(hs, v), n) for v in vs), Fraction(0))
    return MeasureValue(vertex_part, weighted_length(ctx, paths))


def extended_measure(ctx: MeasureContext, words: Iterable[Word]) -> MeasureValue:
    """The extended measure on words of ``G^``.

    Each distinct path word contributes the weighted length of its reduced
    diagram, so different words sharing a reduced diagram count separately.
    The empty word contributes nothing.
    """
    vs = set()
    path_part = Fraction(0)
    for w in set(words):
        if w.is_empty:
            continue
        for e in w.edges:
            if not ctx.shadowed.has_edge(e):
                raise DomainError(f"word {format_word(w)} is not over G^")
        if w.is_vertex:
            vs.add(w.vertex)
            continue
        d = reduced_diagram(w)
        path_part += weight(ctx, d) * d.length
    return MeasureValue(degree_measure(ctx, vs), path_part)


def extended_mu(ctx: MeasureContext, words: Iterable[Word]) -> Fraction:
    return extended_measure(ctx, words).total


@dataclass(frozen=True)
class EquivalenceCertificate:
    """A measure-preserving bijection between two reduced diagram sets."""

    isomorphism: object
    bijection: dict
    singleton_measures: tuple

    @property
    def verified(self) -> bool:
        return all(a == b for _, a, b in self.singleton_measures)


def _map_diagram(iso, d: Diagram) -> Diagram:
    if d.is_vertex:
        return Diagram.of_vertex(iso.vertices[d.source])
    return Diagram(iso.vertices[d.source], iso.vertices[d.range],
                   tuple(iso.map_edge(e) for e in d.trace))


def measure_spaces_equivalent(ctx1: MeasureContext, ctx2: MeasureContext
                              ) -> EquivalenceCertificate | None:
    """Certificate that the two reduced-diagram measure spaces are equivalent.

    The search looks for an isomorphism of the shadowed graphs that respects
    inversion (an edge may land on a reversed edge), with equal weights when
    the contexts are weighted.  The induced map on reduced diagrams is checked
    to be a bijection onto the second diagram set that preserves every
    singleton measure.  Returns None when no such isomorphism exists.
    """
    if ctx1.mode != ctx2.mode or ctx1.weighted != ctx2.weighted:
        raise DomainError("contexts must share mode and weighting")
    def same_weight(e, f):
        return ctx1.graph.weight(e) == ctx2.graph.weight(f)

    iso = find_isomorphism(ctx1.graph, ctx2.graph, directed=False,
                           edge_match=same_weight if ctx1.weighted else None)
    if iso is None:
        return None
    bijection = {}
    rows = []
    for d in ctx1.reduced_diagram_set:
        image = _map_diagram(iso, d)
        if image not in ctx2.reduced_diagram_set:
            return None
        bijection[d] = image
        rows.append((d, mu_shadowed(ctx1, [d]), mu_shadowed(ctx2, [image])))
    if len(set(bijection.values())) != len(ctx2.reduced_diagram_set):
        return None
    return EquivalenceCertificate(iso, bijection, tuple(rows))
