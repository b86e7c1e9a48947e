"""Immutable folded graphs and their canonical form."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .words import Alphabet

Edge = tuple[int, int, int]


class NotFoldedError(ValueError):
    pass


class DisconnectedError(ValueError):
    pass


@dataclass(frozen=True)
class FoldedGraph:
    """Deterministic labeled graph with a base vertex.

    ``edges`` holds ``(from, generator, to)`` triples over vertices
    ``0..num_vertices-1``.  ``vertex_map``, when present, sends each vertex of
    the graph that was folded to its vertex here; it is not part of equality.
    """

    alphabet: Alphabet
    base: int
    num_vertices: int
    edges: frozenset[Edge]
    vertex_map: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def _tables(self) -> tuple[list[list[int]], list[list[int]], bool]:
        n = self.alphabet.rank
        out = [[-1] * (n + 1) for _ in range(self.num_vertices)]
        inc = [[-1] * (n + 1) for _ in range(self.num_vertices)]
        folded = True
        for u, x, w in self.edges:
            if out[u][x] != -1 or inc[w][x] != -1:
                folded = False
            out[u][x] = w
            inc[w][x] = u
        return out, inc, folded

    def is_folded(self) -> bool:
        return self._tables[2]

    def _require_folded(self) -> None:
        if not self.is_folded():
            raise NotFoldedError("graph has two edges with equal label and incidence")

    def step(self, v: int, x: int) -> int:
        """Vertex reached from ``v`` by signed letter ``x``, or -1."""
        self._require_folded()
        out, inc, _ = self._tables
        return out[v][x] if x > 0 else inc[v][-x]

    def neighbors(self, v: int) -> list[tuple[int, int]]:
        """``(signed letter, vertex)`` pairs at ``v``: outgoing edges by
        ascending label, then incoming edges by ascending label."""
        self._require_folded()
        out, inc, _ = self._tables
        n = self.alphabet.rank
        res = [(x, out[v][x]) for x in range(1, n + 1) if out[v][x] != -1]
        res.extend((-x, inc[v][x]) for x in range(1, n + 1) if inc[v][x] != -1)
        return res

    def is_regular(self) -> bool:
        """Every vertex has an outgoing and an incoming edge of every label."""
        self._require_folded()
        out, inc, _ = self._tables
        return all(
            -1 not in row[1:] for table in (out, inc) for row in table
        )

    @cached_property
    def automaton(self) -> list[list]:
        """Linked state objects for fast word tracing.

        ``states[v][x]`` is the state reached from ``v`` by signed letter
        ``x`` (negative indexes reach inverse letters); slot 0 holds ``v``.
        The extra last state is an absorbing sink for missing edges.
        """
        self._require_folded()
        n = self.alphabet.rank
        V = self.num_vertices
        states: list[list] = [[v] + [None] * (2 * n) for v in range(V + 1)]
        sink = states[V]
        sink[0] = -1
        for x in range(1, n + 1):
            sink[x] = sink[-x] = sink
        out, inc, _ = self._tables
        for v in range(V):
            st = states[v]
            o, i = out[v], inc[v]
            for x in range(1, n + 1):
                st[x] = states[o[x]] if o[x] != -1 else sink
                st[-x] = states[i[x]] if i[x] != -1 else sink
        return states


def bfs_tree(f: FoldedGraph) -> tuple[list[int], dict[int, tuple[int, int]]]:
    """Breadth-first search from the base in canonical edge order.

    Returns the discovery order and, for every non-base vertex, the pair
    ``(parent, signed letter)`` of the tree edge used to reach it.
    """
    order = [f.base]
    seen = [False] * f.num_vertices
    seen[f.base] = True
    parent: dict[int, tuple[int, int]] = {}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for x, w in f.neighbors(v):
            if not seen[w]:
                seen[w] = True
                parent[w] = (v, x)
                order.append(w)
    return order, parent


def canonicalize(f: FoldedGraph) -> FoldedGraph:
    """Renumber vertices by breadth-first discovery order from the base."""
    order, _ = bfs_tree(f)
    if len(order) != f.num_vertices:
        raise DisconnectedError(
            f"{f.num_vertices - len(order)} vertices unreachable from the base"
        )
    new = [0] * f.num_vertices
    for i, v in enumerate(order):
        new[v] = i
    edges = frozenset((new[u], x, new[w]) for u, x, w in f.edges)
    vmap = None if f.vertex_map is None else tuple(new[v] for v in f.vertex_map)
    return FoldedGraph(f.alphabet, 0, f.num_vertices, edges, vmap)


def format_edges(f: FoldedGraph) -> list[str]:
    letter = f.alphabet.letter
    return [f"{u} {letter(x)} {w}" for u, x, w in f.sorted_edges()]


def canonical_form(f: FoldedGraph) -> str:
    """Isomorphism-invariant code of a connected folded graph, e.g.
    ``"0 a 1;0 b 0;1 a 0;1 b 1"``."""
    return ";".join(format_edges(canonicalize(f)))
