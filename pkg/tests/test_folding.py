import pytest
from hypothesis import given, settings

from stallings.folded import FoldedGraph, NotFoldedError, canonical_form, canonicalize
from stallings.folding import (
    FoldError,
    build_bouquet,
    classify_vertex,
    fold,
    fold_arbitrary,
    fold_step,
    fold_words,
)
from stallings.graph import LabeledGraph
from stallings.naive import naive_bouquet, naive_fold, naive_fold_words
from stallings.subgroup import is_member
from stallings.words import Alphabet, Word, free_reduce, parse_word

from conftest import word_lists
from oracles import same_partition

ROSE = "0 a 0;0 b 0"
INDEX_TWO_CODE = "0 a 1;0 b 0;1 a 0;1 b 1"


def incremental_bouquet(words, alphabet):
    g = LabeledGraph(alphabet)
    v0 = g.add_vertex()
    for w in words:
        letters = free_reduce(w).letters
        prev = v0
        for i, x in enumerate(letters):
            nxt = v0 if i == len(letters) - 1 else g.add_vertex()
            if x > 0:
                g.add_edge(prev, x, nxt)
            else:
                g.add_edge(nxt, -x, prev)
            prev = nxt
    return g


def words_of(*texts, rank=2):
    return [parse_word(t, Alphabet(rank)) for t in texts]


class TestBouquet:
    def test_example_sizes(self, example_words, rank2):
        g = build_bouquet(example_words, rank2)
        assert (g.live_edge_count, g.num_vertices, g.base) == (10, 8, 0)
        assert g.unfolded_vertices() == [0]
        g.check_invariants()

    def test_single_loop(self, rank2):
        g = build_bouquet(words_of("a"), rank2)
        assert (g.num_vertices, g.live_edge_count) == (1, 1)
        assert g.unfolded_vertices() == []

    def test_empty(self, rank2):
        g = build_bouquet([], rank2)
        assert (g.num_vertices, g.live_edge_count) == (1, 0)

    def test_empty_words_skipped(self, rank2):
        g = build_bouquet(words_of("", "ab", "aA"), rank2)
        assert (g.num_vertices, g.live_edge_count) == (2, 2)

    def test_rejects_large_generator(self, rank2):
        with pytest.raises(ValueError):
            build_bouquet([Word((3,))], rank2)

    @settings(max_examples=200, deadline=None)
    @given(word_lists())
    def test_bulk_matches_incremental(self, case):
        rank, words = case
        alphabet = Alphabet(rank)
        bulk = build_bouquet(words, alphabet)
        inc = incremental_bouquet(words, alphabet)
        for name in ("nxt", "prv", "owner", "head", "tail"):
            assert list(getattr(bulk.lists, name)) == list(getattr(inc.lists, name)), name
        assert bulk.initial == inc.initial
        assert bulk.terminal == inc.terminal
        assert bulk.label == inc.label
        bulk.check_invariants()

    @settings(max_examples=100, deadline=None)
    @given(word_lists())
    def test_matches_oracle_construction(self, case):
        _, words = case
        g = build_bouquet(words, Alphabet(4))
        nv, edges = naive_bouquet(words)
        assert g.num_vertices == nv
        assert sorted(g.edge_triples()) == sorted(edges)


class TestClassify:
    def test_bouquet_base_unfolded(self, example_words, rank2):
        g = build_bouquet(example_words, rank2)
        pair = classify_vertex(g, 0)
        assert pair is not None and abs(pair.key) == 1
        ends = g.initial if pair.key > 0 else g.terminal
        assert ends[pair.first] == ends[pair.second] == 0
        assert g.label[pair.first] == g.label[pair.second] == 1

    def test_loop_vertex_folded(self, rank2):
        g = build_bouquet(words_of("a"), rank2)
        assert classify_vertex(g, 0) is None

    def test_all_slots_distinct(self, rank2):
        g = LabeledGraph(rank2)
        v, u = g.add_vertex(), g.add_vertex()
        g.add_edge(v, 1, u)
        g.add_edge(u, 1, v)
        g.add_edge(v, 2, u)
        g.add_edge(u, 2, v)
        assert classify_vertex(g, v) is None
        assert g.inspected == 4

    def test_scan_is_bounded(self, rank2):
        g = LabeledGraph(rank2)
        v = g.add_vertex()
        others = [g.add_vertex() for _ in range(20)]
        for i, w in enumerate(others):
            g.add_edge(v, 1 + i % 2, w) if i % 4 < 2 else g.add_edge(w, 1 + i % 2, v)
        assert classify_vertex(g, v) is not None
        assert g.inspected <= 2 * rank2.rank + 1

    def test_non_root(self, rank2):
        g = LabeledGraph(rank2)
        u, w = g.add_vertex(), g.add_vertex()
        g.forest.merge(u, w)
        with pytest.raises(ValueError):
            classify_vertex(g, w)


def fold_once(g, v):
    pair = classify_vertex(g, v)
    assert pair is not None
    return fold_step(g, v, *pair)


class TestFoldStep:
    def test_case_a_merges_far_ends(self, rank2):
        g = build_bouquet(words_of("abba", "aaa"), rank2)
        ev = fold_once(g, 0)
        assert ev.case == "A"
        # second vertices of both loops are now one class
        assert g.root(1) == g.root(4)
        assert g.live_edge_count == 6
        g.check_invariants()

    def test_case_b_parallel_edges(self, rank2):
        g = LabeledGraph(rank2)
        u, w = g.add_vertex(), g.add_vertex()
        g.add_edge(u, 1, w)
        g.add_edge(u, 1, w)
        expected = naive_fold(g)
        ev = fold_once(g, u)
        assert ev.case == "B" and ev.kept == -1
        assert g.edge_triples() == [(u, 1, w)]
        assert g.unfolded_vertices() == []
        assert canonical_form(fold(g)[0]) == canonical_form(expected) == "0 a 1"

    def test_case_b_double_loop(self, rank2):
        g = LabeledGraph(rank2)
        u = g.add_vertex()
        g.add_edge(u, 2, u)
        g.add_edge(u, 2, u)
        assert fold_once(g, u).case == "B"
        assert g.edge_triples() == [(u, 2, u)]

    @pytest.mark.parametrize("loop_first", [True, False])
    def test_case_c_loop_absorbs_edge(self, rank2, loop_first):
        g = LabeledGraph(rank2)
        v, w = g.add_vertex(), g.add_vertex()
        if loop_first:
            loop = g.add_edge(v, 1, v)
            g.add_edge(v, 1, w)
        else:
            g.add_edge(v, 1, w)
            loop = g.add_edge(v, 1, v)
        expected = naive_fold(g)
        ev = fold_once(g, v)
        assert ev.case == "C"
        assert g.root(v) == g.root(w)
        assert g.live_edges() == [loop]
        r = g.root(v)
        assert g.edge_triples() == [(r, 1, r)]
        assert canonical_form(fold(g)[0]) == canonical_form(expected) == "0 a 0"

    def test_rejects_bad_pairs(self, rank2):
        g = LabeledGraph(rank2)
        u, w = g.add_vertex(), g.add_vertex()
        e1 = g.add_edge(u, 1, w)
        e2 = g.add_edge(u, 2, w)
        e3 = g.add_edge(w, 1, u)
        with pytest.raises(FoldError):
            fold_step(g, u, e1, e1, 1)
        with pytest.raises(FoldError):
            fold_step(g, u, e1, e2, 1)
        with pytest.raises(FoldError):
            fold_step(g, u, e1, e3, 1)

    def test_locality(self, rank2):
        g = build_bouquet(words_of("abba", "Aba", "aaa", "bbAB", "abab"), rank2)
        _, trace = fold(g)
        for ev in trace:
            assert ev.reclassified <= 3
            assert ev.inspected <= 3 * (2 * rank2.rank + 1)


class TestFold:
    def test_example(self, example_words, rank2):
        f, trace = fold(build_bouquet(example_words, rank2))
        assert f.num_vertices == 1
        assert f.edges == frozenset({(0, 1, 0), (0, 2, 0)})
        assert len(trace) == 10 - 2

    def test_index_two(self, index_two_words, rank2):
        f, _ = fold(build_bouquet(index_two_words, rank2))
        assert f.num_vertices == 2
        assert canonicalize(f).edges == frozenset({(0, 1, 1), (1, 1, 0), (0, 2, 0), (1, 2, 1)})

    def test_already_folded(self, rank2):
        f, trace = fold_words(words_of("a"), rank2)
        assert f.edges == frozenset({(0, 1, 0)}) and len(trace) == 0

    def test_invariants_hold_after_every_step(self, example_words, rank2):
        g = build_bouquet(example_words + words_of("bAbaB", "abAB"), rank2, instrument=True)
        while g.unfolded_vertices():
            v = g.unfolded_vertices()[0]
            pair = classify_vertex(g, v)
            if pair is None:
                g.unmark_unfolded(v)
            else:
                fold_step(g, v, *pair)
            g.check_invariants()
        assert canonical_form(fold(g)[0]) == ROSE

    def test_trace_text(self, index_two_words, rank2):
        _, trace = fold(build_bouquet(index_two_words, rank2))
        lines = trace.to_text(rank2).splitlines()
        assert len(lines) == 2
        assert all(line.split("\t")[0] == "A" and line.split("\t")[4] == "a" for line in lines)

    @settings(max_examples=300, deadline=None)
    @given(word_lists())
    def test_properties(self, case):
        rank, words = case
        alphabet = Alphabet(rank)
        g = build_bouquet(words, alphabet)
        before = g.live_edge_count
        f, trace = fold(g)
        g.check_invariants()
        # edge conservation
        assert before - len(trace) == f.num_edges == trace.final_edges
        # foldedness by direct scan
        outs, ins = set(), set()
        for u, x, w in f.edges:
            assert (u, x) not in outs and (w, x) not in ins
            outs.add((u, x))
            ins.add((w, x))
        # confluence with the oracle, down to the vertex partition
        slow = naive_fold_words(words, alphabet)
        assert canonical_form(f) == canonical_form(slow)
        assert same_partition(f.vertex_map, slow.vertex_map)
        for w in words:
            assert is_member(f, Word(w))


class TestFoldArbitrary:
    def test_parallel_edges(self, rank2):
        g = LabeledGraph(rank2)
        u, w = g.add_vertex(), g.add_vertex()
        g.add_edge(u, 1, w)
        g.add_edge(u, 1, w)
        f, trace = fold_arbitrary(g)
        assert f.num_vertices == 2 and f.edges == frozenset({(0, 1, 1)})
        assert len(trace) == 1

    def test_folded_input_unchanged(self, rank2):
        g = LabeledGraph(rank2)
        u, w = g.add_vertex(), g.add_vertex()
        g.add_edge(u, 1, w)
        g.add_edge(w, 2, u)
        f, trace = fold_arbitrary(g)
        assert len(trace) == 0
        assert canonical_form(f) == "0 a 1;1 b 0"

    def test_refolding_output_is_fixpoint(self, index_two_words, rank2):
        f, _ = fold_words(index_two_words, rank2)
        g = LabeledGraph(rank2)
        for _ in range(f.num_vertices):
            g.add_vertex()
        for u, x, w in f.sorted_edges():
            g.add_edge(u, x, w)
        f2, trace = fold_arbitrary(g)
        assert len(trace) == 0
        assert canonical_form(f2) == canonical_form(f) == INDEX_TWO_CODE

    def test_disconnected_components_fold(self, rank2):
        g = LabeledGraph(rank2)
        v = [g.add_vertex() for _ in range(6)]
        g.add_edge(v[0], 1, v[1])
        g.add_edge(v[0], 1, v[2])
        g.add_edge(v[3], 2, v[4])
        g.add_edge(v[5], 2, v[4])
        expected = naive_fold(g)
        f, _ = fold_arbitrary(g)
        assert f.is_folded()
        assert f.num_vertices == expected.num_vertices == 4
        assert same_partition(f.vertex_map, expected.vertex_map)

    @settings(max_examples=200, deadline=None)
    @given(word_lists(max_words=10, max_len=6))
    def test_random_graphs_match_oracle(self, case):
        rank, words = case
        # reuse the letters as a random edge list on a handful of vertices
        alphabet = Alphabet(rank)
        g = LabeledGraph(alphabet)
        n = 1 + len(words)
        for _ in range(n):
            g.add_vertex()
        for i, w in enumerate(words):
            for j, x in enumerate(w):
                g.add_edge((i + j) % n, abs(x), (i * j + abs(x)) % n)
        expected = naive_fold(g)
        f, trace = fold_arbitrary(g)
        g.check_invariants()
        assert f.is_folded()
        assert same_partition(f.vertex_map, expected.vertex_map)
        assert f.num_edges == expected.num_edges


class TestCanonicalForm:
    def test_rose(self, rank2):
        assert canonical_form(FoldedGraph(rank2, 0, 1, frozenset({(0, 1, 0), (0, 2, 0)}))) == ROSE

    def test_index_two(self, rank2):
        f = FoldedGraph(rank2, 0, 2, frozenset({(0, 1, 1), (1, 1, 0), (0, 2, 0), (1, 2, 1)}))
        assert canonical_form(f) == INDEX_TWO_CODE

    def test_relabeling_invariant(self, rank2):
        edges = {(0, 1, 1), (1, 2, 2), (2, 1, 0), (2, 2, 3)}
        f = FoldedGraph(rank2, 0, 4, frozenset(edges))
        perm = [3, 0, 2, 1]
        g = FoldedGraph(rank2, perm[0], 4, frozenset((perm[u], x, perm[w]) for u, x, w in edges))
        assert canonical_form(f) == canonical_form(g)

    def test_base_matters(self, rank2):
        edges = frozenset({(0, 1, 1)})
        assert canonical_form(FoldedGraph(rank2, 0, 2, edges)) != canonical_form(
            FoldedGraph(rank2, 1, 2, edges)
        )

    def test_unfolded_rejected(self, rank2):
        f = FoldedGraph(rank2, 0, 2, frozenset({(0, 1, 1), (0, 1, 0)}))
        with pytest.raises(NotFoldedError):
            canonical_form(f)
