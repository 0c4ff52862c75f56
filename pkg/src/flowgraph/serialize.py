"""JSON, DOT and plain-text renderings of flow graphs."""
from __future__ import annotations

import json
from typing import Iterable

from .structure import CONTAINER_KINDS, FlowGraph


def graph_to_dict(g: FlowGraph) -> dict:
    return {
        "name": g.method,
        "nodes": [{"id": n.id, "kind": n.kind.value, "txt": n.txt} for n in g.nodes],
        "cf": [{"src": a, "dst": b} for a, b in g.cf_edges()],
        "df": [{"src": a, "dst": b} for a, b in g.df_edges()],
        "vars": [
            {"name": v.name, "kind": v.kind.value, "definers": v.definers, "users": v.users}
            for v in g.vars
        ],
    }


def emit_json(graphs: Iterable[FlowGraph]) -> str:
    doc = {"methods": [graph_to_dict(g) for g in graphs]}
    return json.dumps(doc, indent=2) + "\n"


def _dot_string(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(graphs: Iterable[FlowGraph]) -> str:
    out = []
    for g in graphs:
        out.append(f"digraph {_dot_string(g.method)} {{")
        out.append("  node [shape=box, fontname=monospace];")
        for n in g.nodes:
            attrs = [f"label={_dot_string(n.txt)}"]
            if n.kind in CONTAINER_KINDS:
                attrs.append("style=dotted")
            elif n.id in (g.entry, g.exit):
                attrs.append("shape=ellipse")
            out.append(f"  n{n.id} [{', '.join(attrs)}];")
        for a, b in g.cf_edges():
            out.append(f"  n{a} -> n{b};")
        for a, b in g.df_edges():
            out.append(f'  n{a} -> n{b} [style=dashed, label="df"];')
        out.append("}")
    return "\n".join(out) + "\n"


def emit_text(graphs: Iterable[FlowGraph]) -> str:
    out = []
    for g in graphs:
        out.append(f"method {g.method}")
        for n in g.nodes:
            line = f"  [{n.id}] {n.kind.value} {n.txt}"
            if n.cf_next:
                line += "  cf->" + ",".join(map(str, sorted(n.cf_next)))
            if n.df_next:
                line += "  df->" + ",".join(map(str, sorted(n.df_next)))
            out.append(line)
        for v in g.vars:
            out.append(f"  {v.kind.value.lower()} {v.name}: definers={v.definers} users={v.users}")
    return "\n".join(out) + "\n"


EMITTERS = {"json": emit_json, "dot": emit_dot, "text": emit_text}
