"""Simple functions and their integrals against the graph measures.

Every function on a finite diagram set is a finite combination of
indicators, so the integral of a simple function is the whole story: the
supremum over simple minorants of a nonnegative function is attained by the
function itself.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from graphmeasure._core import kernels
from graphmeasure.diagrams import Diagram, reduced_diagram
from graphmeasure.errors import DomainError
from graphmeasure.expressions import BinOp, Indicator, Monomial, Neighborhood, Node, Number
from graphmeasure.graph import Graph
from graphmeasure.measures import (
    MeasureContext,
    degree_measure,
    extended_mu,
    mu_shadowed,
    subgraph_measure,
    total_measure,
)
from graphmeasure.words import Word, enumerate_words, is_reduced, power


@dataclass(frozen=True)
class NeighborhoodPredicate:
    """Lazy support {words composable with ``word`` on either side}."""

    word: Word

    def __contains__(self, x):
        if not isinstance(x, Word) or x.is_empty:
            return False
        return x.source == self.word.range or x.range == self.word.source


@dataclass(frozen=True)
class SimpleFunction:
    """Finite rational combination of indicator functions.

    ``terms`` holds ``(coefficient, support)`` pairs; supports are frozensets
    of diagrams or words (or a :class:`NeighborhoodPredicate` for extended
    integrals).
    """

    terms: tuple = ()

    @classmethod
    def indicator(cls, support: Iterable, coefficient=1) -> SimpleFunction:
        return cls(((Fraction(coefficient), frozenset(support)),))

    @classmethod
    def zero(cls) -> SimpleFunction:
        return cls(())

    def __call__(self, x) -> Fraction:
        return sum((a for a, s in self.terms if x in s), Fraction(0))

    def points(self) -> frozenset:
        out = set()
        for _, s in self.terms:
            if isinstance(s, NeighborhoodPredicate):
                raise DomainError("a neighborhood predicate has no finite point set")
            out |= s
        return frozenset(out)

    def support(self) -> frozenset:
        return frozenset(x for x in self.points() if self(x) != 0)

    def __add__(self, other):
        if not isinstance(other, SimpleFunction):
            return NotImplemented
        return SimpleFunction(self.terms + other.terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, SimpleFunction):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> SimpleFunction:
        c = Fraction(c)
        return SimpleFunction(tuple((c * a, s) for a, s in self.terms))

    def __mul__(self, other):
        if isinstance(other, SimpleFunction):
            return product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__


def product(g1: SimpleFunction, g2: SimpleFunction) -> SimpleFunction:
    """Pointwise product, using 1_S * 1_T = 1_(S & T)."""
    terms = []
    for a, s in g1.terms:
        for b, t in g2.terms:
            common = s & t
            if common:
                terms.append((a * b, frozenset(common)))
    return SimpleFunction(tuple(terms))


def canonical(g: SimpleFunction) -> SimpleFunction:
    """Equivalent function whose supports are disjoint level sets."""
    levels = defaultdict(set)
    for x in g.points():
        v = g(x)
        if v != 0:
            levels[v].add(x)
    return SimpleFunction(tuple((v, frozenset(xs)) for v, xs in sorted(levels.items())))


def positive_part(g: SimpleFunction) -> SimpleFunction:
    return SimpleFunction(tuple((a, s) for a, s in canonical(g).terms if a > 0))


def negative_part(g: SimpleFunction) -> SimpleFunction:
    return SimpleFunction(tuple((-a, s) for a, s in canonical(g).terms if a < 0))


def absolute(g: SimpleFunction) -> SimpleFunction:
    return positive_part(g) + negative_part(g)


def integrate(ctx: MeasureContext, g: SimpleFunction) -> Fraction:
    """Sum of coefficient times measure of support, over the terms."""
    total = Fraction(0)
    for a, s in g.terms:
        if isinstance(s, NeighborhoodPredicate):
            raise DomainError("neighborhood predicates need extended_integrate")
        total += a * mu_shadowed(ctx, s)
    return total


# ---------------------------------------------------------------------------
# neighborhood functions g_w

@dataclass(frozen=True)
class NeighborhoodSets:
    left: frozenset
    right: frozenset

    @property
    def union(self) -> frozenset:
        return self.left | self.right


def _endpoints(w) -> tuple:
    if isinstance(w, Word):
        if w.is_empty:
            raise DomainError("g_w is undefined for the empty word")
        return w.source, w.range
    if isinstance(w, Diagram):
        return w.source, w.range
    raise DomainError(f"expected a Word or Diagram, got {type(w).__name__}")


def neighborhoods_between(ctx: MeasureContext, source: str, range: str) -> NeighborhoodSets:
    dr = ctx.reduced_diagram_set
    return NeighborhoodSets(frozenset(dr.with_endpoints(source=range)),
                            frozenset(dr.with_endpoints(range=source)))


def neighborhoods(ctx: MeasureContext, w) -> NeighborhoodSets:
    """Reduced diagrams composable after ``w`` (left) and before it (right)."""
    s, r = _endpoints(w)
    return neighborhoods_between(ctx, s, r)


def g_w(ctx: MeasureContext, w) -> SimpleFunction:
    return SimpleFunction.indicator(neighborhoods(ctx, w).union)


EDGE_TERMS = ("neighborhood", "endpoints")


def _term(ctx, x: Diagram, endpoints, edge_terms) -> frozenset:
    if edge_terms == "endpoints" and not x.is_vertex:
        return frozenset({Diagram.of_vertex(x.source), Diagram.of_vertex(x.range)})
    return neighborhoods_between(ctx, *endpoints).union


def monomial_support(ctx: MeasureContext, n: int) -> tuple:
    if n == 0:
        raise DomainError("g^0 is the constant function; use a polynomial")
    dr = ctx.reduced_diagram_set
    if abs(n) == 1:
        return tuple(dr)
    return tuple(d for d in dr if d.is_vertex or d.is_loop)


def monomial(ctx: MeasureContext, n: int, *, edge_terms: str = "neighborhood") -> SimpleFunction:
    """Sum over x in the support of the indicator g_(x^n).

    ``x^n`` keeps the endpoints of ``x`` (swapped for negative ``n``) and is
    empty for a non-loop path when ``|n| >= 2``; those points drop out of the
    support.  ``edge_terms="endpoints"`` values each path term by its two
    endpoint vertices instead of its neighborhood sets.
    """
    if edge_terms not in EDGE_TERMS:
        raise DomainError(f"unknown edge_terms {edge_terms!r}")
    terms = []
    for x in monomial_support(ctx, n):
        ends = (x.range, x.source) if n < 0 else (x.source, x.range)
        support = _term(ctx, x, ends, edge_terms)
        if support:
            terms.append((Fraction(1), support))
    return SimpleFunction(tuple(terms))


def monomial_integral(ctx: MeasureContext, n: int, *, edge_terms: str = "neighborhood") -> Fraction:
    return integrate(ctx, monomial(ctx, n, edge_terms=edge_terms))


def polynomial_integral(ctx: MeasureContext, coeffs, *, edge_terms: str = "neighborhood") -> Fraction:
    """Integral of sum a_n g_n (g_0 = 1) by the closed form.

    a_0 mu(D_r) + a_1 I(g_1) + (a_2 + ... + a_N) I(g_2).
    """
    coeffs = [Fraction(a) for a in coeffs]
    out = Fraction(0)
    if coeffs and coeffs[0]:
        out += coeffs[0] * total_measure(ctx)
    if len(coeffs) > 1 and coeffs[1]:
        out += coeffs[1] * monomial_integral(ctx, 1, edge_terms=edge_terms)
    tail = sum(coeffs[2:], Fraction(0))
    if tail:
        out += tail * monomial_integral(ctx, 2, edge_terms=edge_terms)
    return out


def trigonometric_integral(ctx: MeasureContext, coeffs: Mapping[int, object], *,
                           edge_terms: str = "neighborhood") -> Fraction:
    """Integral of sum_{n=-M}^{N} a_n g_n by the closed form.

    a_0 mu(D_r) + (a_1 + a_-1) I(g_1) + (sum over |n| >= 2 of a_n) I(g_2).
    """
    a = {int(k): Fraction(v) for k, v in coeffs.items()}
    out = Fraction(0)
    if a.get(0):
        out += a[0] * total_measure(ctx)
    first = a.get(1, Fraction(0)) + a.get(-1, Fraction(0))
    if first:
        out += first * monomial_integral(ctx, 1, edge_terms=edge_terms)
    tail = sum((v for k, v in a.items() if abs(k) >= 2), Fraction(0))
    if tail:
        out += tail * monomial_integral(ctx, 2, edge_terms=edge_terms)
    return out


def non_loop_truncation(ctx: MeasureContext, w: Word, coeffs) -> Fraction:
    """Integral of sum a_k (g_w)^k with (g_w)^0 = 1, via actual word powers.

    For a non-loop path every power from 2 on is the empty word and
    contributes nothing; for a loop every power has the same neighborhoods.
    """
    if not w.is_path:
        raise DomainError("non_loop_truncation needs a finite path")
    coeffs = [Fraction(a) for a in coeffs]
    out = Fraction(0)
    if coeffs and coeffs[0]:
        out += coeffs[0] * total_measure(ctx)
    for k, a in enumerate(coeffs[1:], start=1):
        if not a:
            continue
        wk = power(w, k)
        if wk.is_empty:
            continue
        out += a * integrate(ctx, g_w(ctx, wk))
    return out


def subgraph_integrate(ctx: MeasureContext, h: Graph, w, *, strict: bool = False) -> Fraction:
    """Integral of g_w against the measure of the full subgraph ``h``."""
    return subgraph_measure(ctx, h, neighborhoods(ctx, w).union, strict=strict).total


# ---------------------------------------------------------------------------
# extended measure

CONVERGED = "converged"
DIVERGING = "diverging"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ExtendedIntegral:
    """Result of an extended integral with a divergence report.

    ``strata[k]`` is the contribution of words of length ``k`` from the
    neighborhood terms; ``exact_part`` is the contribution of explicit finite
    supports.  The status is a heuristic: converged when the last two strata
    vanish, diverging when the last three strata (or the last three sums of
    adjacent path strata) are nonzero with one sign.
    """

    exact_part: Fraction
    strata: tuple
    status: str

    @property
    def partial_sum(self) -> Fraction:
        return self.exact_part + sum(self.strata, Fraction(0))

    @property
    def value(self):
        if self.status == DIVERGING:
            tail = self.strata[-1]
            return math.inf if tail > 0 else -math.inf
        return self.partial_sum


def _classify(strata) -> str:
    if not strata:
        return CONVERGED
    if len(strata) >= 2 and strata[-1] == 0 and strata[-2] == 0:
        return CONVERGED
    def one_sign(xs):
        return all(x > 0 for x in xs) or all(x < 0 for x in xs)

    if len(strata) >= 4 and one_sign(strata[-3:]):
        return DIVERGING
    # bipartite graphs alternate zero strata; sums of adjacent pairs see through that
    paths = strata[1:]
    if len(paths) >= 4 and one_sign([a + b for a, b in zip(paths[-4:], paths[-3:])]):
        return DIVERGING
    return INCONCLUSIVE


def neighborhood_strata(ctx: MeasureContext, w: Word, max_len: int, *,
                        universe: str = "all") -> list:
    """Per-length extended measure of the words composable with ``w``.

    Index 0 holds the vertex words; index k the words of length k.
    """
    if w.is_empty:
        raise DomainError("g_w is undefined for the empty word")
    if universe not in ("all", "reduced"):
        raise DomainError(f"unknown word universe {universe!r}")
    g = ctx.shadowed
    n, src, dst, codes, vindex, by_code = g.kernel_tables()
    strata = [degree_measure(ctx, {w.source, w.range})]
    counts = kernels.stratum_counts(n, src, dst, codes, max_len,
                                    [vindex[w.range]], [vindex[w.source]],
                                    universe == "reduced")
    for bucket in counts:
        total = Fraction(0)
        for (_, _, trace), count in bucket.items():
            d_weight = Fraction(1)
            for c in trace:
                d_weight *= ctx.weight_of(by_code[c])
            total += count * d_weight * len(trace)
        strata.append(total)
    return strata


def extended_integrate(ctx: MeasureContext, g: SimpleFunction, max_len: int, *,
                       universe: str = "all") -> ExtendedIntegral:
    """Integral against the extended measure on words of ``G^``.

    Explicit finite word sets are measured exactly; neighborhood predicates
    are summed stratum by stratum up to ``max_len``.
    """
    if max_len < 1:
        raise DomainError("max_len must be at least 1")
    exact = Fraction(0)
    strata = None
    for a, s in g.terms:
        if isinstance(s, NeighborhoodPredicate):
            contrib = neighborhood_strata(ctx, s.word, max_len, universe=universe)
            if strata is None:
                strata = [Fraction(0)] * len(contrib)
            strata = [x + a * y for x, y in zip(strata, contrib)]
        else:
            exact += a * extended_mu(ctx, s)
    if strata is None:
        return ExtendedIntegral(exact, (), CONVERGED)
    return ExtendedIntegral(exact, tuple(strata), _classify(strata))


def extended_g_w(w: Word) -> SimpleFunction:
    return SimpleFunction(((Fraction(1), NeighborhoodPredicate(w)),))


def extended_support(ctx: MeasureContext, n: int, max_len: int, *,
                     universe: str = "all") -> list:
    """Words up to ``max_len`` at which the extended monomial g_n is nonzero.

    ``x^n`` exists for every word when ``|n| = 1`` and only for vertices and
    loops when ``|n| >= 2``.  With ``universe="reduced"`` only
    cancellation-free words are considered.
    """
    if n == 0:
        raise DomainError("g^0 is the constant function")
    words = enumerate_words(ctx.shadowed, max_len)
    if universe == "reduced":
        words = [w for w in words if is_reduced(w)]
    elif universe != "all":
        raise DomainError(f"unknown word universe {universe!r}")
    return [w for w in words if not power(w, n).is_empty]


# ---------------------------------------------------------------------------
# expression evaluation

def evaluate_expression(ctx: MeasureContext, node: Node, *,
                        edge_terms: str = "neighborhood") -> SimpleFunction:
    """Simple function on D_r(G^) denoted by a parsed expression.

    Word literals must already be resolved (parse with the graph).
    """
    if isinstance(node, Number):
        return SimpleFunction.indicator(ctx.reduced_diagram_set, node.value)
    if isinstance(node, Indicator):
        return SimpleFunction.indicator(reduced_diagram(w) for w in node.words)
    if isinstance(node, Neighborhood):
        return g_w(ctx, node.word)
    if isinstance(node, Monomial):
        return monomial(ctx, node.n, edge_terms=edge_terms)
    if isinstance(node, BinOp):
        left = evaluate_expression(ctx, node.left, edge_terms=edge_terms)
        right = evaluate_expression(ctx, node.right, edge_terms=edge_terms)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return product(left, right)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_extended(node: Node) -> SimpleFunction:
    """Simple function on words of G^ for the extended integral.

    Only indicators of explicit word sets, neighborhood terms ``g[w]``, sums,
    differences and rational multiples are meaningful on the infinite word
    set.
    """
    if isinstance(node, Indicator):
        return SimpleFunction.indicator(node.words)
    if isinstance(node, Neighborhood):
        return extended_g_w(node.word)
    if isinstance(node, BinOp):
        if node.op == "*":
            if isinstance(node.left, Number):
                return evaluate_extended(node.right).scale(node.left.value)
            if isinstance(node.right, Number):
                return evaluate_extended(node.left).scale(node.right.value)
            raise DomainError("extended integrands support only rational multiples")
        left = evaluate_extended(node.left)
        right = evaluate_extended(node.right)
        return left + right if node.op == "+" else left - right
    raise DomainError("constants and monomials have no finite extended integral; "
                      "use ind{...} and g[w] terms")


__all__ = [
    "SimpleFunction", "NeighborhoodSets", "NeighborhoodPredicate", "ExtendedIntegral",
    "product", "canonical", "positive_part", "negative_part", "absolute", "integrate",
    "neighborhoods", "neighborhoods_between", "g_w", "monomial", "monomial_support",
    "monomial_integral", "polynomial_integral", "trigonometric_integral",
    "non_loop_truncation", "subgraph_integrate", "neighborhood_strata",
    "extended_integrate", "extended_g_w", "extended_support",
    "evaluate_expression", "evaluate_extended",
]
