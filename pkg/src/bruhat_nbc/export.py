"""Serialization: DOT for Bruhat graphs, JSON-ready dicts for NBC/phi tables."""

from __future__ import annotations

from .arrangement import phi
from .bruhat import BruhatGraph
from .coxeter import CoxeterSystem, Element, reduced_word
from .typea import to_permutation


def element_label(W: CoxeterSystem, x: Element) -> str:
    """One-line notation in type A, otherwise a reduced word like ``s1s2s1``."""
    if W.datum.kind == "A":
        return str(to_permutation(W, x))
    word = reduced_word(W, x)
    return "".join(f"s{s + 1}" for s in word) if word else "e"


def to_dot(graph: BruhatGraph, name: str = "bg") -> str:
    """Covering edges solid, non-covering edges dashed; vertices ranked by length."""
    W = graph.system
    lengths = W.lengths
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    members = sorted(graph.interval.members, key=lambda i: (lengths[i], i))
    for i in members:
        lines.append(f'  v{i} [label="{element_label(W, W.elements[i])}"];')
    by_len: dict[int, list[int]] = {}
    for i in members:
        by_len.setdefault(lengths[i], []).append(i)
    for row in by_len.values():
        lines.append("  { rank=same; " + " ".join(f"v{i};" for i in row) + " }")
    for u, v, r in sorted(graph.edges):
        style = "solid" if graph.is_covering((u, v, r)) else "dashed"
        lines.append(f"  v{u} -> v{v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def nbc_json(arr, family, with_phi: bool = False) -> dict:
    """NBC family as JSON; always carries the reduced word it depends on."""
    W = arr.system
    out = {
        "word": [s + 1 for s in arr.word],
        "roots": list(arr.roots),
        "circuits": [list(c.positions) for c in family.circuits],
        "nbc_sets": [list(s) for s in family.sets],
    }
    if with_phi:
        out["phi"] = [{"nbc": list(s), "image": element_label(W, phi(arr, s, family))}
                      for s in family.sets]
    return out
