"""Mutable directed labeled graph whose vertices are union-find classes.

Edge ``e`` owns two list slots in :attr:`LabeledGraph.lists`: slot ``2*e``
sits in the edge list at its initial vertex and slot ``2*e + 1`` in the edge
list at its terminal vertex.  A loop puts both slots in the same list.  The
edge list of vertex ``v`` is list ``v`` of the arena.

Stored endpoints may go stale as classes merge; the live endpoints of an
edge are the roots of its stored endpoints, and :meth:`update_edge` writes
them back.  Labels are always positive generator indices; an inverse letter
is a backwards traversal.
"""

from __future__ import annotations

import enum

from .disjoint_sets import Forest
from .linked_lists import NIL, ListArena
from .words import Alphabet


class GraphError(ValueError):
    pass


class Incidence(enum.Enum):
    OUTGOING = "out"
    INCOMING = "in"
    LOOP = "loop"


class LabeledGraph:
    def __init__(self, alphabet: Alphabet, *, instrument: bool = False):
        self.alphabet = alphabet
        self.forest = Forest()
        self.lists = ListArena(instrument=instrument)
        # one slot per vertex, a single list (id 0) holding unfolded roots
        self.unfolded = ListArena(lists=1, instrument=instrument)
        self.initial: list[int] = []
        self.terminal: list[int] = []
        self.label: list[int] = []
        self.alive: list[bool] = []
        self.base: int | None = None
        self.live_edge_count = 0
        # edge-list entries inspected while classifying vertices
        self.inspected = 0

    @property
    def num_vertices(self) -> int:
        return len(self.forest)

    @property
    def num_edges(self) -> int:
        """Number of edges ever created, deleted ones included."""
        return len(self.label)

    def root(self, v: int) -> int:
        return self.forest.find_root(v)

    def add_vertex(self) -> int:
        v = self.forest.make_node()
        self.lists.new_list()
        self.unfolded.new_slot()
        if self.base is None:
            self.base = v
        return v

    def add_edge(self, u: int, x: int, v: int) -> int:
        if not 1 <= x <= self.alphabet.rank:
            raise GraphError(f"label {x} outside alphabet of rank {self.alphabet.rank}")
        n = self.num_vertices
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoints {u}, {v} are not vertices")
        e = len(self.label)
        self.initial.append(u)
        self.terminal.append(v)
        self.label.append(x)
        self.alive.append(True)
        self.lists.extend_slots(2)
        self.lists.addnode(2 * e, self.root(u))
        self.lists.addnode(2 * e + 1, self.root(v))
        self.live_edge_count += 1
        return e

    def delete_edge(self, e: int) -> None:
        if not self.alive[e]:
            return
        self.lists.remove(2 * e)
        self.lists.remove(2 * e + 1)
        self.alive[e] = False
        self.live_edge_count -= 1

    def update_edge(self, e: int) -> None:
        find = self.forest.find_root
        self.initial[e] = find(self.initial[e])
        self.terminal[e] = find(self.terminal[e])

    def incidence(self, e: int, v: int) -> Incidence:
        find = self.forest.find_root
        u = find(self.initial[e])
        w = find(self.terminal[e])
        if u == v:
            return Incidence.LOOP if w == v else Incidence.OUTGOING
        if w == v:
            return Incidence.INCOMING
        raise GraphError(f"edge {e} is not adjacent to vertex class {v}")

    def edges_at(self, v: int) -> list[int]:
        """Edge ids in the edge list of root ``v``; loops appear twice."""
        return [s >> 1 for s in self.lists.iterate(v)]

    def mark_unfolded(self, v: int) -> None:
        if not self.forest.is_root(v):
            raise GraphError(f"vertex {v} is not a class root")
        if self.unfolded.is_detached(v):
            self.unfolded.addnode(v, 0)

    def unmark_unfolded(self, v: int) -> None:
        self.unfolded.remove(v)

    def is_marked(self, v: int) -> bool:
        return not self.unfolded.is_detached(v)

    def unfolded_vertices(self) -> list[int]:
        return self.unfolded.to_list(0)

    def live_edges(self) -> list[int]:
        return [e for e, ok in enumerate(self.alive) if ok]

    def edge_triples(self) -> list[tuple[int, int, int]]:
        """Live edges as ``(root(initial), label, root(terminal))``."""
        find = self.forest.find_root
        return [
            (find(self.initial[e]), self.label[e], find(self.terminal[e]))
            for e in self.live_edges()
        ]

    def check_invariants(self) -> None:
        """Verify list structure, slot bookkeeping and UNFOLDED contents."""
        classes = self.forest.classes()
        root_of = {}
        for r, members in classes.items():
            for m in members:
                root_of[m] = r
        entries = 0
        for v in range(self.num_vertices):
            slots = self.lists.check_well_formed(v)
            if slots and root_of[v] != v:
                raise AssertionError(f"non-root {v} has a non-empty edge list")
            for s in slots:
                e = s >> 1
                if not self.alive[e]:
                    raise AssertionError(f"deleted edge {e} still listed at {v}")
                end = self.initial[e] if s % 2 == 0 else self.terminal[e]
                if root_of[end] != v:
                    raise AssertionError(f"slot {s} of edge {e} listed at wrong class {v}")
            entries += len(slots)
        if entries != 2 * self.live_edge_count:
            raise AssertionError(
                f"{entries} edge-list entries for {self.live_edge_count} live edges"
            )
        marked = self.unfolded.check_well_formed(0)
        if len(set(marked)) != len(marked):
            raise AssertionError("vertex listed twice in UNFOLDED")
        for v in marked:
            if root_of[v] != v:
                raise AssertionError(f"non-root {v} in UNFOLDED")

    def __repr__(self) -> str:
        return (
            f"LabeledGraph(rank={self.alphabet.rank}, vertices={self.num_vertices}, "
            f"live_edges={self.live_edge_count}, base={self.base})"
        )


__all__ = ["GraphError", "Incidence", "LabeledGraph", "NIL"]
