"""Quadratic reference folding used as a test oracle.

No union-find and no edge lists: every identification rewrites the whole
edge list, and every round rescans all edges for a foldable pair.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .folded import FoldedGraph
from .graph import LabeledGraph
from .words import Alphabet, Word, free_reduce


def naive_bouquet(words: Iterable[Word | Sequence[int]]) -> tuple[int, list[tuple[int, int, int]]]:
    """Vertex count and edge triples of the wedge of loops, built letter by
    letter with the same vertex numbering as the fast construction."""
    edges = []
    nv = 1
    for w in words:
        letters = free_reduce(w).letters
        if not letters:
            continue
        prev = 0
        for i, x in enumerate(letters):
            if i == len(letters) - 1:
                nxt = 0
            else:
                nxt = nv
                nv += 1
            edges.append((prev, x, nxt) if x > 0 else (nxt, -x, prev))
            prev = nxt
    return nv, edges


def naive_fold_edges(
    num_vertices: int,
    edges: Iterable[tuple[int, int, int]],
    base: int,
    alphabet: Alphabet,
) -> FoldedGraph:
    edges = [list(e) for e in edges]
    rep = list(range(num_vertices))
    vertices = set(range(num_vertices))
    while True:
        seen: dict[tuple[int, int], tuple[int, int]] = {}
        found = None
        for i, (u, x, w) in enumerate(edges):
            for key, far in (((u, x), w), ((w, -x), u)):
                hit = seen.get(key)
                if hit is None:
                    seen[key] = (i, far)
                elif hit[0] != i:
                    found = (hit[1], i, far)
                    break
            if found:
                break
        if found is None:
            break
        keep, dup, gone = found
        del edges[dup]
        if gone != keep:
            for e in edges:
                if e[0] == gone:
                    e[0] = keep
                if e[2] == gone:
                    e[2] = keep
            rep = [keep if r == gone else r for r in rep]
            vertices.discard(gone)
            if base == gone:
                base = keep
    order = [base] + sorted(vertices - {base})
    new_id = {v: i for i, v in enumerate(order)}
    return FoldedGraph(
        alphabet,
        0,
        len(order),
        frozenset((new_id[u], x, new_id[w]) for u, x, w in edges),
        tuple(new_id[r] for r in rep),
    )


def naive_fold(g: LabeledGraph) -> FoldedGraph:
    """Fold a snapshot of ``g``'s current classes and live edges."""
    classes = g.forest.classes()
    roots = sorted(classes)
    index = {r: i for i, r in enumerate(roots)}
    root_of = {m: r for r, members in classes.items() for m in members}
    edges = [
        (index[root_of[g.initial[e]]], g.label[e], index[root_of[g.terminal[e]]])
        for e in g.live_edges()
    ]
    base = index[root_of[g.base]] if g.base is not None else 0
    if not roots:
        return FoldedGraph(g.alphabet, 0, 1, frozenset(), ())
    f = naive_fold_edges(len(roots), edges, base, g.alphabet)
    vmap = tuple(f.vertex_map[index[root_of[v]]] for v in range(g.num_vertices))
    return FoldedGraph(f.alphabet, f.base, f.num_vertices, f.edges, vmap)


def naive_fold_words(words: Iterable[Word | Sequence[int]], alphabet: Alphabet) -> FoldedGraph:
    nv, edges = naive_bouquet(words)
    return naive_fold_edges(nv, edges, 0, alphabet)
