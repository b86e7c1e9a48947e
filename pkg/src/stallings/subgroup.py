"""Subgroup invariants read off a folded graph."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from operator import getitem

from .folded import DisconnectedError, FoldedGraph, bfs_tree, canonicalize
from .words import Word, free_reduce, invert_word

INFINITE = math.inf


@dataclass(frozen=True)
class SubgroupReport:
    index: int | float
    rank: int
    basis: list[Word]
    transversal: list[Word]


def _check_alphabet(f: FoldedGraph, w: Word) -> None:
    if not w.fits(f.alphabet.rank):
        raise ValueError(
            f"word uses generator {w.max_generator()} outside rank {f.alphabet.rank}"
        )


def trace(f: FoldedGraph, w: Word) -> tuple[int, int]:
    """Walk ``w`` (reduced first) from the base.

    Returns ``(end vertex or -1, steps taken)``.  Every letter is one
    transition; once an edge is missing the walk stays in a dead state, so
    the step count always equals the reduced length.
    """
    w = free_reduce(w)
    _check_alphabet(f, w)
    states = f.automaton
    state = states[f.base]
    steps = 0
    for x in w.letters:
        state = state[x]
        steps += 1
    return state[0], steps


def is_member(f: FoldedGraph, w: Word) -> bool:
    """True iff ``w`` labels a closed walk at the base vertex.

    Runs the transition table in C via ``functools.reduce``; one lookup per
    letter of the reduced word.
    """
    w = free_reduce(w)
    _check_alphabet(f, w)
    states = f.automaton
    start = states[f.base]
    return reduce(getitem, w.letters, start) is start


def index(f: FoldedGraph) -> int | float:
    """Number of cosets: the vertex count if the graph is regular, else inf."""
    return f.num_vertices if f.is_regular() else INFINITE


def spanning_tree(f: FoldedGraph) -> dict[int, tuple[int, int, int, int]]:
    """Breadth-first spanning tree from the base.

    Maps each non-base vertex to ``(u, x, w, direction)``: the tree edge
    ``u -x-> w`` and ``+1`` if it was walked forwards, ``-1`` if backwards.
    """
    order, parent = bfs_tree(f)
    if len(order) != f.num_vertices:
        raise DisconnectedError("folded graph is not connected")
    tree = {}
    for child, (p, x) in parent.items():
        if x > 0:
            tree[child] = (p, x, child, 1)
        else:
            tree[child] = (child, -x, p, -1)
    return tree


def _tree_paths(f: FoldedGraph) -> tuple[list[int], list[tuple[int, ...]]]:
    order, parent = bfs_tree(f)
    if len(order) != f.num_vertices:
        raise DisconnectedError("folded graph is not connected")
    paths: list[tuple[int, ...]] = [()] * f.num_vertices
    for v in order[1:]:
        p, x = parent[v]
        paths[v] = paths[p] + (x,)
    return order, paths


def schreier_transversal(f: FoldedGraph) -> list[Word]:
    """Tree-path labels from the base, in breadth-first order (prefix-closed)."""
    order, paths = _tree_paths(f)
    return [Word(paths[v], reduced=True, bound=f.alphabet.rank) for v in order]


def nielsen_basis(f: FoldedGraph) -> list[Word]:
    """One generator per non-tree edge ``u -x-> w``:
    ``path(u) * x * path(w)^-1``, in canonical edge order."""
    f = canonicalize(f)
    _, paths = _tree_paths(f)
    tree = {(u, x, w) for u, x, w, _ in spanning_tree(f).values()}
    basis = []
    for u, x, w in f.sorted_edges():
        if (u, x, w) in tree:
            continue
        word = paths[u] + (x,) + invert_word(Word(paths[w])).letters
        basis.append(free_reduce(word))
    return basis


def subgroup_rank(f: FoldedGraph) -> int:
    return f.num_edges - f.num_vertices + 1


def analyze(f: FoldedGraph) -> SubgroupReport:
    f = canonicalize(f)
    return SubgroupReport(
        index=index(f),
        rank=subgroup_rank(f),
        basis=nielsen_basis(f),
        transversal=schreier_transversal(f),
    )
