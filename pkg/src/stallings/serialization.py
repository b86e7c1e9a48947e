"""Text, JSON and DOT renderings of folded graphs.

All writers canonicalize first, so vertex numbers follow breadth-first
discovery from the base (base is 0) and edges are sorted by
``(from, label, to)``.

JSON::

    {"alphabet": 2, "base": 0, "vertices": 2, "edges": [[0, "a", 1], ...]}

Text::

    vertices: 2
    base: 0
    0 a 1
    ...
"""

from __future__ import annotations

import json

from .folded import FoldedGraph, canonicalize, format_edges
from .words import Alphabet, ParseError


def to_text(f: FoldedGraph) -> str:
    f = canonicalize(f)
    lines = [f"vertices: {f.num_vertices}", f"base: {f.base}", *format_edges(f)]
    return "\n".join(lines) + "\n"


def to_json(f: FoldedGraph) -> str:
    f = canonicalize(f)
    letter = f.alphabet.letter
    doc = {
        "alphabet": f.alphabet.rank,
        "base": f.base,
        "vertices": f.num_vertices,
        "edges": [[u, letter(x), w] for u, x, w in f.sorted_edges()],
    }
    return json.dumps(doc) + "\n"


def from_json(text: str) -> FoldedGraph:
    try:
        doc = json.loads(text)
        alphabet = Alphabet(int(doc["alphabet"]))
        codes = {ch: i for i, ch in enumerate(alphabet.letters, start=1)}
        edges = frozenset((int(u), codes[x], int(w)) for u, x, w in doc["edges"])
        nv = int(doc["vertices"])
        base = int(doc["base"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed folded-graph JSON: {exc}") from exc
    if not 0 <= base < nv or any(not (0 <= u < nv and 0 <= w < nv) for u, _, w in edges):
        raise ParseError("vertex index out of range in folded-graph JSON")
    return FoldedGraph(alphabet, base, nv, edges)


def to_dot(f: FoldedGraph) -> str:
    f = canonicalize(f)
    letter = f.alphabet.letter
    lines = ["digraph folded {", "  node [shape=circle];"]
    for v in range(f.num_vertices):
        lines.append(f"  {v} [shape=doublecircle];" if v == f.base else f"  {v};")
    for u, x, w in f.sorted_edges():
        lines.append(f'  {u} -> {w} [label="{letter(x)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


WRITERS = {"text": to_text, "json": to_json, "dot": to_dot}
