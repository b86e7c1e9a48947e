"""Stallings folding with a disjoint-set forest and intrusive edge lists.

Every elementary folding merges at most two vertex classes, splices their
edge lists in constant time and deletes one edge.  Edge endpoints are only
brought up to date when an edge is inspected, so each folding touches a
bounded number of edges and the whole run is near-linear in the input size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .folded import FoldedGraph
from .graph import GraphError, LabeledGraph
from .linked_lists import NIL
from .words import Alphabet, Word, free_reduce


class FoldError(ValueError):
    pass


class UnfoldedPair(NamedTuple):
    """Two distinct edges leaving a vertex the same way.

    ``key`` is ``+x`` when both are outgoing ``x``-edges (or loops) and
    ``-x`` when both are incoming.
    """

    first: int
    second: int
    key: int


class FoldEvent(NamedTuple):
    case: str
    kept: int
    absorbed: int
    deleted: tuple[int, int, int]
    reclassified: int
    inspected: int


@dataclass
class FoldTrace:
    events: list[FoldEvent] = field(default_factory=list)
    initial_edges: int = 0
    final_edges: int = 0

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def to_text(self, alphabet: Alphabet) -> str:
        """One tab-separated line per folding:
        ``case kept absorbed from label to`` (``-`` when nothing merged)."""
        lines = []
        for ev in self.events:
            u, x, w = ev.deleted
            kept = "-" if ev.kept < 0 else str(ev.kept)
            absorbed = "-" if ev.absorbed < 0 else str(ev.absorbed)
            lines.append(f"{ev.case}\t{kept}\t{absorbed}\t{u}\t{alphabet.letter(x)}\t{w}")
        return "".join(line + "\n" for line in lines)


def _coerce_words(words: Iterable[Word | Sequence[int]], alphabet: Alphabet) -> list[Word]:
    out = []
    for w in words:
        w = free_reduce(w)
        if not w.fits(alphabet.rank):
            raise ValueError(f"word uses a generator outside rank {alphabet.rank}")
        if len(w):
            out.append(w)
    return out


def build_bouquet(
    words: Iterable[Word | Sequence[int]],
    alphabet: Alphabet,
    *,
    instrument: bool = False,
) -> LabeledGraph:
    """Wedge of one loop per word at base vertex 0, with UNFOLDED seeded.

    Vertices are numbered word by word along each loop.  The arrays are
    filled in bulk and match what the equivalent sequence of
    :meth:`LabeledGraph.add_edge` calls would build.
    """
    words = _coerce_words(words, alphabet)
    g = LabeledGraph(alphabet, instrument=instrument)
    m = len(words)
    lengths = np.fromiter((len(w) for w in words), dtype=np.int64, count=m)
    N = int(lengths.sum())
    V = N - m + 1
    g.forest.extend(V)
    g.unfolded.extend_slots(V)
    g.base = 0
    if N == 0:
        g.lists.extend_lists(1)
        return g

    letters = np.fromiter(
        (x for w in words for x in w.letters), dtype=np.int64, count=N
    )
    starts = np.zeros(m, dtype=np.int64)
    np.cumsum(lengths[:-1], out=starts[1:])
    ends = starts + lengths - 1
    first = np.zeros(N, dtype=bool)
    first[starts] = True
    last = np.zeros(N, dtype=bool)
    last[ends] = True
    word_id = np.cumsum(first) - 1
    k = np.arange(N, dtype=np.int64)

    # vertex before letter k, and after it
    pre = np.where(first, 0, k - word_id)
    post = np.empty(N, dtype=np.int64)
    post[:-1] = pre[1:]
    post[last] = 0
    pos = letters > 0
    initial = np.where(pos, pre, post)
    terminal = np.where(pos, post, pre)

    # slot of edge k at its "pre" end and at its "post" end
    a = 2 * k + (~pos)
    b = 2 * k + pos

    nxt = np.full(2 * N, NIL, dtype=np.int64)
    prv = np.full(2 * N, NIL, dtype=np.int64)
    owner = np.full(2 * N, NIL, dtype=np.int64)
    head = np.full(V, NIL, dtype=np.int64)
    tail = np.full(V, NIL, dtype=np.int64)

    # interior vertex pre[k] (k not first) holds [b[k-1], a[k]]
    inner = np.flatnonzero(~first)
    bl, ar, vert = b[inner - 1], a[inner], pre[inner]
    nxt[bl] = ar
    prv[ar] = bl
    owner[bl] = vert
    owner[ar] = vert
    head[vert] = bl
    tail[vert] = ar

    # base vertex: per word, its first-letter slot then its last-letter slot;
    # a one-letter loop appends its initial slot before its terminal slot
    single = lengths == 1
    s_first = np.where(single, 2 * starts, a[starts])
    s_last = np.where(single, 2 * starts + 1, b[ends])
    seq = np.empty(2 * m, dtype=np.int64)
    seq[0::2] = s_first
    seq[1::2] = s_last
    nxt[seq[:-1]] = seq[1:]
    prv[seq[1:]] = seq[:-1]
    owner[seq[0]] = 0
    owner[seq[-1]] = 0
    head[0] = seq[0]
    tail[0] = seq[-1]

    g.lists.load(nxt.tolist(), prv.tolist(), owner.tolist(), head.tolist(), tail.tolist())
    g.initial = initial.tolist()
    g.terminal = terminal.tolist()
    g.label = np.abs(letters).tolist()
    g.alive = [True] * N
    g.live_edge_count = N

    if classify_vertex(g, 0) is not None:
        g.mark_unfolded(0)
    return g


def classify_vertex(g: LabeledGraph, v: int) -> UnfoldedPair | None:
    """Scan the edge list of root ``v``; return the first foldable pair, or
    None if ``v`` is folded.

    Every inspected edge is updated to point at current roots.  A folded
    vertex has at most ``2 * rank`` entries, so at most ``2 * rank + 1``
    entries are ever inspected.
    """
    forest = g.forest
    if not forest.is_root(v):
        raise GraphError(f"vertex {v} is not a class root")
    find = forest.find_root
    parent = forest.parent
    initial, terminal, label = g.initial, g.terminal, g.label
    nxt = g.lists.nxt
    seen: dict[int, int] = {}
    s = g.lists.head[v]
    while s != NIL:
        e = s >> 1
        g.inspected += 1
        # update_edge, skipping the call when an endpoint is already a root
        u = initial[e]
        if parent[u] != u:
            u = initial[e] = find(u)
        w = terminal[e]
        if parent[w] != w:
            w = terminal[e] = find(w)
        x = label[e]
        if u == v:
            keys = (x, -x) if w == v else (x,)
        elif w == v:
            keys = (-x,)
        else:
            raise GraphError(f"edge {e} listed at {v} but not adjacent to it")
        for key in keys:
            other = seen.get(key)
            if other is None:
                seen[key] = e
            elif other != e:
                return UnfoldedPair(other, e, key)
        s = nxt[s]
    return None


def _root(g: LabeledGraph, n: int) -> int:
    return n if g.forest.parent[n] == n else g.forest.find_root(n)


def _far_end(g: LabeledGraph, e: int, key: int) -> int:
    return _root(g, g.terminal[e] if key > 0 else g.initial[e])


def _near_end(g: LabeledGraph, e: int, key: int) -> int:
    return _root(g, g.initial[e] if key > 0 else g.terminal[e])


def _absorb(g: LabeledGraph, x: int, y: int) -> tuple[int, int]:
    winner = g.forest.merge(x, y)
    loser = y if winner == x else x
    g.unmark_unfolded(loser)
    g.lists.concatenate(winner, loser)
    return winner, loser


def fold_step(g: LabeledGraph, v: int, first: int, second: int, key: int) -> FoldEvent:
    """Perform one elementary folding of edges ``first`` and ``second`` at ``v``.

    Case A: distinct far ends, neither equal to ``v``: merge them and delete
    ``second``.  Case B: equal far ends: delete ``second``.  Case C: one edge
    is a loop at ``v``: merge ``v`` with the other far end and delete the
    non-loop edge.  Afterwards every affected class is re-classified and its
    UNFOLDED membership set accordingly.
    """
    if first == second or not (g.alive[first] and g.alive[second]):
        raise FoldError("fold_step needs two distinct live edges")
    x = abs(key)
    if g.label[first] != x or g.label[second] != x:
        raise FoldError("edges do not carry the label of the fold key")
    if not g.forest.is_root(v):
        raise FoldError(f"vertex {v} is not a class root")
    if _near_end(g, first, key) != v or _near_end(g, second, key) != v:
        raise FoldError(f"edges do not share incidence {key:+d} at {v}")

    r = _far_end(g, first, key)
    s = _far_end(g, second, key)
    deleted = second
    kept = absorbed = -1
    if r == s:
        case = "B"
    elif r != v and s != v:
        case = "A"
        kept, absorbed = _absorb(g, r, s)
    else:
        case = "C"
        if r == v:
            deleted, w = second, s
        else:
            deleted, w = first, r
        kept, absorbed = _absorb(g, v, w)

    removed = (_root(g, g.initial[deleted]), x, _root(g, g.terminal[deleted]))
    g.delete_edge(deleted)

    before = g.inspected
    affected: list[int] = []
    for c in (v, r, s):
        c = _root(g, c)
        if c not in affected:
            affected.append(c)
    for c in affected:
        if classify_vertex(g, c) is None:
            g.unmark_unfolded(c)
        else:
            g.mark_unfolded(c)
    return FoldEvent(case, kept, absorbed, removed, len(affected), g.inspected - before)


def _fold_loop(g: LabeledGraph, trace: FoldTrace | None) -> None:
    head = g.unfolded.head
    while head[0] != NIL:
        v = head[0]
        pair = classify_vertex(g, v)
        if pair is None:
            g.unmark_unfolded(v)
            continue
        event = fold_step(g, v, *pair)
        if trace is not None:
            trace.events.append(event)


def compact(g: LabeledGraph) -> FoldedGraph:
    """Freeze ``g`` into a :class:`FoldedGraph`.

    Surviving roots are renumbered with the base's class first and the rest
    in increasing order of vertex id.
    """
    find = g.forest.find_root
    nv = g.num_vertices
    roots = [find(v) for v in range(nv)]
    base = roots[g.base] if nv else 0
    new_id = [-1] * nv
    new_id[base] = 0
    count = 1
    for v in range(nv):
        if roots[v] == v and v != base:
            new_id[v] = count
            count += 1
    initial, terminal, label = g.initial, g.terminal, g.label
    edges = frozenset(
        (new_id[roots[initial[e]]], label[e], new_id[roots[terminal[e]]])
        for e in g.live_edges()
    )
    vertex_map = tuple(new_id[r] for r in roots)
    return FoldedGraph(g.alphabet, 0, count, edges, vertex_map)


def fold(g: LabeledGraph, *, record: bool = True) -> tuple[FoldedGraph, FoldTrace]:
    """Fold a graph whose UNFOLDED list is already seeded (see
    :func:`build_bouquet`)."""
    trace = FoldTrace(initial_edges=g.live_edge_count)
    _fold_loop(g, trace if record else None)
    trace.final_edges = g.live_edge_count
    return compact(g), trace


def fold_arbitrary(g: LabeledGraph, *, record: bool = True) -> tuple[FoldedGraph, FoldTrace]:
    """Fold any labeled graph: seed UNFOLDED by classifying every class,
    then run the usual loop.  Disconnected graphs fold component-wise."""
    if g.base is None:
        g.add_vertex()
    forest = g.forest
    for v in range(g.num_vertices):
        if forest.is_root(v) and classify_vertex(g, v) is not None:
            g.mark_unfolded(v)
    return fold(g, record=record)


def fold_words(
    words: Iterable[Word | Sequence[int]], alphabet: Alphabet, *, record: bool = True
) -> tuple[FoldedGraph, FoldTrace]:
    return fold(build_bouquet(words, alphabet), record=record)
