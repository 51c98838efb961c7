"""Graph files, JSON report documents and DOT export.

Graph file grammar::

    graph <n> <m>
    [root <id>]
    <u> <v>        (m lines)

Blank lines are ignored. Product vertices are always written as ``"x,y"``.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .errors import DuplicateEdge, InvalidEdge, ParseError
from .graph import UndirectedGraph, eccentricity_profile
from .metrics import DiameterReport, LemmaViolation
from .orient import OrientedProduct, RuleTag
from .product import EdgeKind

SCHEMA_VERSION = 1


def _int_token(tok: str, line: int, col: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None
    if value < 0:
        raise ParseError(f"negative integer {value}", line, col)
    return value


def parse_graph_file(text: str) -> tuple[UndirectedGraph, int | None]:
    """Parse graph-file text into a graph and the optional root."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            rows.append((lineno, raw))
    if not rows:
        raise ParseError("empty input", 1, 1)

    def tokens(lineno, raw):
        out, pos = [], 0
        for tok in raw.split():
            pos = raw.index(tok, pos)
            out.append((tok, pos + 1))
            pos += len(tok)
        return out

    lineno, raw = rows[0]
    head = tokens(lineno, raw)
    if len(head) != 3 or head[0][0] != "graph":
        raise ParseError("header must be 'graph <n> <m>'", lineno, 1)
    n = _int_token(head[1][0], lineno, head[1][1])
    m = _int_token(head[2][0], lineno, head[2][1])

    root = None
    body = rows[1:]
    if body and body[0][1].split()[0] == "root":
        lineno, raw = body[0]
        toks = tokens(lineno, raw)
        if len(toks) != 2:
            raise ParseError("root line must be 'root <id>'", lineno, 1)
        root = _int_token(toks[1][0], lineno, toks[1][1])
        if root >= n:
            raise InvalidEdge(f"root {root} out of range 0..{n - 1}", lineno, toks[1][1])
        body = body[1:]

    if len(body) != m:
        where = body[m][0] if len(body) > m else (rows[-1][0] + 1)
        raise ParseError(f"header announces {m} edges, found {len(body)}", where, 1)
    seen = set()
    edges = []
    for lineno, raw in body:
        toks = tokens(lineno, raw)
        if len(toks) != 2:
            raise ParseError("edge line must be '<u> <v>'", lineno, 1)
        u = _int_token(toks[0][0], lineno, toks[0][1])
        v = _int_token(toks[1][0], lineno, toks[1][1])
        for val, col in ((u, toks[0][1]), (v, toks[1][1])):
            if val >= n:
                raise InvalidEdge(f"vertex {val} out of range 0..{n - 1}", lineno, col)
        if u == v:
            raise InvalidEdge(f"self-loop at {u}", lineno, toks[0][1])
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {u} {v}", lineno, 1)
        seen.add(key)
        edges.append(key)
    return UndirectedGraph(n, edges), root


def format_graph_file(g: UndirectedGraph, root: int | None = None) -> str:
    lines = [f"graph {g.vertex_count} {g.edge_count}"]
    if root is not None:
        lines.append(f"root {root}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# --- report documents --------------------------------------------------------

def _num(x):
    if x is None:
        return None
    if isinstance(x, float) and math.isinf(x):
        return None
    return int(x)


def factor_summary(name: str, g: UndirectedGraph, root: int | None = None, cycle: int | None = None) -> dict:
    prof = eccentricity_profile(g)
    doc: dict[str, Any] = {
        "name": name,
        "vertices": g.vertex_count,
        "edge_count": g.edge_count,
        "edges": [list(e) for e in g.edges()],
        "radius": _num(prof.radius),
        "diameter": _num(prof.diameter),
        "root": root,
    }
    if cycle is not None:
        doc["cycle"] = cycle
    return doc


def diameter_summary(op: OrientedProduct, rep: DiameterReport) -> dict:
    label = op.product.label
    return {
        "diameter": _num(rep.diameter),
        "witness": [label(rep.witness[0]), label(rep.witness[1])] if rep.witness else None,
        "strongly_connected": rep.strongly_connected,
        "bound": rep.bound,
        "slack": _num(rep.slack),
        "bound_kind": rep.bound_kind.value if rep.bound_kind else None,
    }


def violation_summary(v: LemmaViolation) -> dict:
    return {
        "lemma": v.lemma,
        "vertices": [f"{x},{y}" for x, y in v.vertices],
        "measured": _num(v.measured),
    }


def orientation_summary(op: OrientedProduct) -> dict:
    label = op.product.label
    return {"arcs": [[label(t), label(h), tag.value] for t, h, tag in op.arcs]}


def product_summary(op: OrientedProduct) -> dict:
    p = op.product
    return {
        "vertices": p.vertex_count,
        "edges": p.edge_count,
        "edge_kinds": {k.value: p.kind_counts[k] for k in EdgeKind},
    }


def dumps(doc: dict) -> str:
    """Canonical serialization: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_vertex(label: str) -> tuple[int, int]:
    try:
        x, y = label.split(",")
        return int(x), int(y)
    except ValueError:
        raise ParseError(f"bad product vertex {label!r}") from None


def parse_arcs(doc: dict) -> list[tuple[tuple[int, int], tuple[int, int], RuleTag]]:
    try:
        arcs = doc["orientation"]["arcs"]
        return [(parse_vertex(a), parse_vertex(b), RuleTag(tag)) for a, b, tag in arcs]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed orientation: {exc}") from None


# --- DOT ---------------------------------------------------------------------

RULE_COLORS = {
    RuleTag.A: "black",
    RuleTag.B: "gray40",
    RuleTag.C: "red",
    RuleTag.D: "orange",
    RuleTag.E: "purple",
    RuleTag.F: "brown",
    RuleTag.G1: "blue",
    RuleTag.G2: "forestgreen",
    RuleTag.RESIDUAL: "lightgray",
}


def export_dot(op: OrientedProduct, name: str = "D") -> str:
    """DOT text with grid position hints and arcs coloured by rule."""
    p = op.product
    lines = [f'digraph "{name}" {{', "  node [shape=circle, fontsize=8];"]
    for i in range(p.vertex_count):
        x, y = p.coords(i)
        lines.append(f'  "{x},{y}" [pos="{x},{y}!"];')
    for t, h, tag in op.arcs:
        lines.append(f'  "{p.label(t)}" -> "{p.label(h)}" [color="{RULE_COLORS[tag]}", tooltip="{tag.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
