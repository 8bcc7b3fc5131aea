"""DOT and JSON renderings of a comaximal graph"""
from __future__ import annotations

import json
from typing import Any

from .comaximal import ComaximalGraph

KIND_PREFIX = {
    "borel": "B",
    "plane": "P",
    "line": "L",
    "line-nilpotent": "N",
    "line-split": "S",
    "line-nonsplit": "NS",
    "other-dim": "V",
}

KIND_COLOR = {
    "borel": "red",
    "plane": "red",
    "line": "blue",
    "line-split": "blue",
    "line-nilpotent": "green",
    "line-nonsplit": "black",
    "other-dim": "gray",
}


def vertex_label(G: ComaximalGraph, i: int) -> str:
    """Kind prefix plus RREF rows, e.g. ``B[1 0 0;0 0 1]``"""
    v = G.vertices[i]
    return KIND_PREFIX.get(v.kind, "V") + v.subspace.format()


def to_dot(G: ComaximalGraph, name: str | None = None) -> str:
    """Graphviz text with one node per vertex; isolated vertices are drawn black"""
    title = name or f"comaximal_{G.algebra.label}_{G.algebra.field.designation}".replace("^", "_")
    isolated = set(G.isolated)
    lines = [f'graph "{title}" {{', "    node [style=filled, fontcolor=white];"]
    for i, v in enumerate(G.vertices):
        color = "black" if i in isolated else KIND_COLOR.get(v.kind, "gray")
        lines.append(f'    {i} [label="{vertex_label(G, i)}", color={color}, fillcolor={color}];')
    for u, w in G.edges():
        lines.append(f"    {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def vertex_table(G: ComaximalGraph) -> list[dict[str, Any]]:
    return [
        {
            "index": i,
            "label": vertex_label(G, i),
            "dim": v.subspace.dim,
            "kind": v.kind,
            "class": v.klass,
            "span": v.subspace.describe(),
            "degree": G.degrees[i],
        }
        for i, v in enumerate(G.vertices)
    ]


def dumps(data: Any) -> str:
    """Deterministic JSON text (sorted keys, fixed indentation, trailing newline)"""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
