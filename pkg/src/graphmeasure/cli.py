"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors, 2 on parse and usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from graphmeasure.diagrams import (
    diagram,
    diagram_key,
    format_diagram,
    reduced_diagram,
)
from graphmeasure.errors import GraphMeasureError, ParseError
from graphmeasure.expressions import BinOp, Neighborhood, parse_expression, parse_set_literal
from graphmeasure.graph import find_isomorphism, full_subgraph, parse_graph, shadow, shadowed
from graphmeasure.integration import (
    evaluate_expression,
    evaluate_extended,
    extended_integrate,
    integrate,
    neighborhoods,
)
from graphmeasure.measures import (
    MeasureContext,
    format_fraction,
    format_member,
    measure_diagram_space,
    measure_reduced_space,
    measure_spaces_equivalent,
    subgraph_measure,
)

COMMANDS = ("diagrams", "reduced-diagrams", "measure", "integrate", "extended-integrate",
            "shadow", "isocheck", "subgraph-measure")


def _load_graph(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise GraphMeasureError(f"cannot read graph file {path!r}: {exc.strerror}") from None
    return parse_graph(data)


def _context(args, graph=None) -> MeasureContext:
    return MeasureContext(graph if graph is not None else _load_graph(args.graph),
                          weighted=args.weights == "on", mode=args.mode, limit=args.limit)


def _emit_json(payload, out):
    out.write(json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n")


def _sorted(graph, diagrams):
    return sorted(set(diagrams), key=lambda d: diagram_key(graph, d))


def _set_text(graph, diagrams) -> str:
    return "{" + ",".join(format_member(d) for d in _sorted(graph, diagrams)) + "}"


def _emit_diagram_set(ds, args, out):
    if args.format == "json":
        out.write(ds.to_json() + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["source", "range", "trace", "length"])
        for d in ds:
            writer.writerow([d.source, d.range, ".".join(e.id for e in d.trace), d.length])
        out.write(buf.getvalue())
    else:
        for k, cell in ds.by_length.items():
            out.write(f"# length {k}: {len(cell)}\n")
            for d in cell:
                note = "" if d.is_admissible else "  # trace is not a word"
                out.write(format_diagram(d) + note + "\n")
        out.write(f"# total: {len(ds)}\n")


def cmd_diagrams(args, out):
    ctx = _context(args)
    _emit_diagram_set(ctx.diagram_set, args, out)


def cmd_reduced_diagrams(args, out):
    ctx = _context(args)
    _emit_diagram_set(ctx.reduced_diagram_set, args, out)


def _emit_measure(value, members_text, args, out):
    if args.format == "json":
        payload = {
            "set": members_text,
            "vertex_part": format_fraction(value.vertex_part),
            "path_part": format_fraction(value.path_part),
            "total": format_fraction(value.total),
        }
        _emit_json(payload, out)
    else:
        out.write("set: {" + ",".join(members_text) + "}\n")
        out.write(f"vertex_part: {format_fraction(value.vertex_part)}\n")
        out.write(f"path_part: {format_fraction(value.path_part)}\n")
        out.write(f"total: {format_fraction(value.total)}\n")


def cmd_measure(args, out):
    ctx = _context(args)
    words = parse_set_literal(args.set, ctx.graph)
    if args.space == "diagram":
        ds = {diagram(w) for w in words}
        value = measure_diagram_space(ctx, ds)
        graph = ctx.graph
    else:
        ds = {reduced_diagram(w) for w in words}
        value = measure_reduced_space(ctx, ds)
        graph = ctx.shadowed
    _emit_measure(value, [format_member(d) for d in _sorted(graph, ds)], args, out)


def _neighborhood_nodes(node):
    if isinstance(node, Neighborhood):
        yield node
    elif isinstance(node, BinOp):
        yield from _neighborhood_nodes(node.left)
        yield from _neighborhood_nodes(node.right)


def cmd_integrate(args, out):
    ctx = _context(args)
    node = parse_expression(args.expr, ctx.graph)
    g = evaluate_expression(ctx, node, edge_terms=args.edge_terms)
    total = integrate(ctx, g)
    rows = []
    for nb in _neighborhood_nodes(node):
        sets = neighborhoods(ctx, nb.word)
        rows.append({
            "word": format_member(nb.word),
            "left": _set_text(ctx.shadowed, sets.left),
            "right": _set_text(ctx.shadowed, sets.right),
            "union": _set_text(ctx.shadowed, sets.union),
        })
    if args.format == "json":
        _emit_json({"expr": args.expr, "neighborhoods": rows,
                    "total": format_fraction(total)}, out)
        return
    for row in rows:
        out.write(f"neighborhood g[{row['word']}]: {row['union']}\n")
    out.write(f"total: {format_fraction(total)}\n")


def _format_value(v) -> str:
    if isinstance(v, float) and math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format_fraction(v)


def cmd_extended_integrate(args, out):
    ctx = _context(args)
    node = parse_expression(args.expr, ctx.shadowed)
    g = evaluate_extended(node)
    result = extended_integrate(ctx, g, args.max_len, universe=args.universe)
    if args.format == "json":
        _emit_json({
            "expr": args.expr,
            "strata": [format_fraction(x) for x in result.strata],
            "partial_sum": format_fraction(result.partial_sum),
            "status": result.status,
            "total": _format_value(result.value),
        }, out)
        return
    for k, x in enumerate(result.strata):
        out.write(f"stratum {k}: {format_fraction(x)}\n")
    out.write(f"partial_sum: {format_fraction(result.partial_sum)}\n")
    out.write(f"status: {result.status}\n")
    out.write(f"total: {_format_value(result.value)}\n")


def cmd_shadow(args, out):
    g = _load_graph(args.graph)
    h = shadowed(g) if args.shadowed else shadow(g)
    rows = [{"id": e.id, "source": e.source, "target": e.target,
             "weight": format_fraction(h.weight(e))} for e in h.edges]
    if args.format == "json":
        _emit_json({"vertices": list(h.vertices), "edges": rows}, out)
        return
    for v in h.vertices:
        out.write(f"vertex {v}\n")
    for r in rows:
        out.write(f"edge {r['id']} {r['source']} {r['target']} weight {r['weight']}\n")


def cmd_isocheck(args, out):
    g1 = _load_graph(args.graph)
    g2 = _load_graph(args.other)
    if args.measure:
        cert = measure_spaces_equivalent(_context(args, g1), _context(args, g2))
        if cert is None:
            payload = {"equivalent": False}
        else:
            payload = {
                "equivalent": cert.verified,
                "vertices": dict(cert.isomorphism.vertices),
                "diagrams": len(cert.bijection),
            }
    else:
        iso = find_isomorphism(g1, g2)
        if iso is None:
            payload = {"isomorphic": False}
        else:
            payload = {"isomorphic": True, "vertices": dict(iso.vertices),
                       "edges": {e.id: f.id for e, f in iso.edges.items()}}
    if args.format == "json":
        _emit_json(payload, out)
        return
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            value = ", ".join(f"{k}->{v}" for k, v in value.items())
        elif isinstance(value, bool):
            value = "yes" if value else "no"
        out.write(f"{key}: {value}\n")


def cmd_subgraph_measure(args, out):
    ctx = _context(args)
    vs = [v.strip() for v in args.vertices.split(",") if v.strip()]
    h = full_subgraph(ctx.graph, vs)
    words = parse_set_literal(args.set, ctx.graph)
    ds = {reduced_diagram(w) for w in words}
    value = subgraph_measure(ctx, h, ds, strict=args.strict)
    _emit_measure(value, [format_member(d) for d in _sorted(ctx.shadowed, ds)], args, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphmeasure",
        description="Diagram measures and graph integrals of finite directed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("--graph", required=True, help="graph file")
        p.add_argument("--mode", choices=("full", "generator"), default="full")
        p.add_argument("--weights", choices=("on", "off"), default="off")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--json", dest="format", action="store_const", const="json")
        p.add_argument("--limit", type=int, default=None,
                       help="state limit for exact diagram enumeration")

    common(sub.add_parser("diagrams", help="list D(G)"))
    common(sub.add_parser("reduced-diagrams", help="list D_r(G^)"))

    p = sub.add_parser("measure", help="measure a set of words' diagrams")
    common(p)
    p.add_argument("--set", required=True)
    p.add_argument("--space", choices=("reduced", "diagram"), default="reduced")

    p = sub.add_parser("integrate", help="integrate a function expression")
    common(p)
    p.add_argument("--expr", required=True)
    p.add_argument("--edge-terms", choices=("neighborhood", "endpoints"),
                   default="neighborhood")

    p = sub.add_parser("extended-integrate", help="integrate against the extended measure")
    common(p)
    p.add_argument("--expr", required=True)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--universe", choices=("all", "reduced"), default="all")

    p = sub.add_parser("shadow", help="print the shadow (or shadowed) graph")
    common(p)
    p.add_argument("--shadowed", action="store_true")

    p = sub.add_parser("isocheck", help="graph isomorphism / measure-space equivalence")
    common(p)
    p.add_argument("--other", "--graph2", dest="other", required=True)
    p.add_argument("--measure", action="store_true",
                   help="check equivalence of the reduced-diagram measure spaces")

    p = sub.add_parser("subgraph-measure", help="measure against a full subgraph")
    common(p)
    p.add_argument("--vertices", required=True, help="comma-separated vertex ids")
    p.add_argument("--set", required=True)
    p.add_argument("--strict", action="store_true")
    return parser


_HANDLERS = {
    "diagrams": cmd_diagrams,
    "reduced-diagrams": cmd_reduced_diagrams,
    "measure": cmd_measure,
    "integrate": cmd_integrate,
    "extended-integrate": cmd_extended_integrate,
    "shadow": cmd_shadow,
    "isocheck": cmd_isocheck,
    "subgraph-measure": cmd_subgraph_measure,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _HANDLERS[args.command](args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except GraphMeasureError as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
