"""DOT, JSON and plain-text renderings of homomorphism graphs."""

from __future__ import annotations

import json

from .dirac import HomGraph, OrbitReport
from .weights import HalfInt, parse_weight
from .weyl import HasseGraph, length

__all__ = ["emit_dot", "emit_json", "emit_text", "graph_from_json", "emit_hasse_dot",
           "emit_hasse_json"]


def _edge_label(order: int | None, bound: HalfInt) -> str:
    return str(order) if order is not None else f"<={bound}"


def emit_dot(source: OrbitReport | HomGraph, name: str = "orbit") -> str:
    """Graphviz digraph; order-2 edges are bold. Node and edge lines are sorted."""
    graph = source.graph if isinstance(source, OrbitReport) else source
    labels = [str(v) for v in graph.vertices]
    nodes = sorted(f'  "{s}";' for s in labels)
    edges = []
    for a, b, order, bound in graph.arrows:
        attrs = f'label="{_edge_label(order, bound)}"'
        if order == 2:
            attrs += ", style=bold"
        edges.append(f'  "{labels[a]}" -> "{labels[b]}" [{attrs}];')
    return "\n".join([f"digraph {name} {{", *nodes, *sorted(edges), "}"]) + "\n"


def _bound_json(bound: HalfInt) -> int | str:
    return int(bound) if bound.is_integer() else str(bound)


def emit_json(report: OrbitReport) -> str:
    g = report.graph
    doc = {
        "k": report.k,
        "n": report.n,
        "rank": report.ctx.m,
        "singular": g.singular,
        "weights": [str(v) for v in g.vertices],
        "edges": [
            {"from": a, "to": b, "order": o, "bound": _bound_json(d)}
            for a, b, o, d in g.arrows
        ],
        "full_relation": [list(p) for p in sorted(report.full_relation)],
        "matches_sk": report.matches_sk,
        "complex_violations": [list(t) for t in report.complex_violations],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def graph_from_json(text: str) -> HomGraph:
    """Rebuild the HomGraph carried by ``emit_json`` output."""
    doc = json.loads(text)
    vertices = [parse_weight(s) for s in doc["weights"]]
    arrows = [
        (e["from"], e["to"], e["order"], HalfInt.of(e["bound"]))
        for e in doc["edges"]
    ]
    flagged = doc["k"] == (doc["n"] - 1) // 2
    return HomGraph(vertices, arrows, doc["singular"], flagged)


def emit_text(report: OrbitReport) -> str:
    g = report.graph
    lines = [
        f"k={report.k} n={report.n} rank={report.ctx.m} weights={len(g.vertices)} "
        f"arrows={len(g.arrows)} singular={g.singular}",
    ]
    if g.k_equals_half_n_minus_1:
        lines.append(f"note: k=(n-1)/2, {len(report.extra_family)} weights outside the Dirac family")
    lines.append("weights:")
    lines.extend(f"  {i:3d}  {v}" for i, v in enumerate(g.vertices))
    lines.append("arrows (operator direction):")
    for a, b, o, d in g.arrows:
        lines.append(f"  {g.vertices[a]} -> {g.vertices[b]}  order {_edge_label(o, d)}")
    lines.append(f"full relation: {len(report.full_relation)} pairs")
    lines.append(f"matches S_k: {report.matches_sk}")
    lines.append(f"complex violations: {len(report.complex_violations)}")
    return "\n".join(lines) + "\n"


def emit_hasse_dot(graph: HasseGraph) -> str:
    nodes = sorted(f'  "{v}" [label="{v} l={length(v)}"];' for v in graph.vertices)
    edges = sorted(f'  "{u}" -> "{v}" [label="{g}"];' for u, v, g in graph.arrows)
    return "\n".join(["digraph hasse {", *nodes, *edges, "}"]) + "\n"


def emit_hasse_json(graph: HasseGraph) -> str:
    index = {v: i for i, v in enumerate(graph.vertices)}
    doc = {
        "vertices": [{"images": list(v.images), "length": length(v)} for v in graph.vertices],
        "arrows": [{"from": index[u], "to": index[v], "root": str(g)} for u, v, g in graph.arrows],
    }
    return json.dumps(doc, indent=2) + "\n"
