"""Exact diagram measures and graph integrals of finite directed graphs."""

from graphmeasure._core import BACKEND
from graphmeasure.diagrams import (
    Diagram,
    DiagramSet,
    diagram,
    enumerate_diagrams,
    enumerate_reduced_diagrams,
    find_witness,
    format_diagram,
    generator_diagrams,
    is_basic,
    is_member,
    parse_diagram,
    reduced_diagram,
)
from graphmeasure.errors import (
    DiagramSetTooLarge,
    DomainError,
    GraphMeasureError,
    IdentifierError,
    ParseError,
    UndefinedEndpointError,
)
from graphmeasure.expressions import format_expression, parse_expression, parse_set_literal
from graphmeasure.graph import (
    Edge,
    Graph,
    degree,
    find_isomorphism,
    full_subgraph,
    make_graph,
    parse_graph,
    serialize_graph,
    shadow,
    shadowed,
)
from graphmeasure.integration import (
    SimpleFunction,
    evaluate_expression,
    extended_integrate,
    g_w,
    integrate,
    monomial,
    neighborhoods,
    polynomial_integral,
)
from graphmeasure.measures import (
    MeasureContext,
    MeasureValue,
    degree_measure,
    extended_mu,
    measure_diagram_space,
    measure_reduced_space,
    measure_spaces_equivalent,
    mu_G,
    mu_shadowed,
)
from graphmeasure.words import EMPTY, Word, format_word, parse_word, power, reduce

__version__ = "0.1.0"

__all__ = [
    "Diagram", "DiagramSet", "diagram", "enumerate_diagrams",
    "enumerate_reduced_diagrams", "find_witness", "format_diagram",
    "generator_diagrams", "is_basic", "is_member", "parse_diagram", "reduced_diagram",
    "DiagramSetTooLarge", "DomainError", "GraphMeasureError", "IdentifierError",
    "ParseError", "UndefinedEndpointError", "Edge", "Graph", "degree",
    "find_isomorphism", "full_subgraph", "make_graph", "parse_graph", "serialize_graph",
    "shadow", "shadowed", "SimpleFunction", "evaluate_expression", "extended_integrate",
    "g_w", "integrate", "monomial", "neighborhoods", "polynomial_integral",
    "MeasureContext", "MeasureValue", "degree_measure", "extended_mu",
    "measure_diagram_space", "measure_reduced_space", "measure_spaces_equivalent",
    "mu_G", "mu_shadowed", "BACKEND", "format_expression", "parse_expression",
    "parse_set_literal", "EMPTY", "Word", "format_word", "parse_word", "power",
    "reduce",
]
