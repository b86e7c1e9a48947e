"""Iterated logarithm, random instances, oracle campaigns and scaling runs."""

from __future__ import annotations

import gc
import math
import random
import statistics
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .folded import canonical_form
from .folding import build_bouquet, fold
from .naive import naive_fold_words
from .words import Alphabet, Word

TSV_HEADER = "N\ttime_ns\tns_per_N\tns_per_NlogstarN\tdsf_traversals"

AMORTIZED_CONSTANT = 10


def log_star(n: int | float) -> int:
    """Least ``k`` such that ``k`` applications of ``log2`` bring ``n`` to <= 1."""
    if n < 1:
        raise ValueError(f"log_star is defined for n >= 1, got {n}")
    k = 0
    while n > 1:
        n = math.log2(n)
        k += 1
    return k


def log_star_pow2(k: int) -> int:
    """``log_star(2**k)`` without building ``2**k``."""
    return log_star(k) + 1


def amortized_bound(operations: int, nodes: int) -> int:
    return AMORTIZED_CONSTANT * (operations + nodes) * (log_star(max(nodes, 1)) + 1)


def random_reduced_word(length: int, rank: int, rng: random.Random) -> Word:
    """Uniform reduced word: each letter avoids the inverse of its predecessor."""
    if length <= 0:
        return Word((), reduced=True)
    signed = [x for g in range(1, rank + 1) for x in (g, -g)]
    choice = rng.choice
    letters = [choice(signed)]
    for _ in range(length - 1):
        x = choice(signed)
        while x == -letters[-1]:
            x = choice(signed)
        letters.append(x)
    return Word(tuple(letters), reduced=True, bound=rank)


@dataclass(frozen=True)
class Instance:
    seed: int
    alphabet: Alphabet
    words: tuple[Word, ...]

    @property
    def size(self) -> int:
        return sum(len(w) for w in self.words)


def random_instance(
    seed: int,
    ranks: tuple[int, int] = (1, 4),
    generators: tuple[int, int] = (1, 6),
    lengths: tuple[int, int] = (1, 30),
) -> Instance:
    rng = random.Random(seed)
    rank = rng.randint(*ranks)
    m = rng.randint(*generators)
    words = tuple(random_reduced_word(rng.randint(*lengths), rank, rng) for _ in range(m))
    return Instance(seed, Alphabet(rank), words)


def oracle_instances(
    trials: int,
    seed: int = 0,
    ranks: tuple[int, int] = (1, 4),
    generators: tuple[int, int] = (1, 6),
    lengths: tuple[int, int] = (1, 30),
) -> Iterator[Instance]:
    master = random.Random(seed)
    for _ in range(trials):
        yield random_instance(master.getrandbits(64), ranks, generators, lengths)


@dataclass(frozen=True)
class TrialResult:
    seed: int
    passed: bool
    fast: str
    naive: str
    operations: int
    traversals: int
    nodes: int


@dataclass(frozen=True)
class OracleReport:
    passed: int
    failed: int
    trials: list[TrialResult]

    @property
    def failures(self) -> list[int]:
        return [t.seed for t in self.trials if not t.passed]


def check_instance(inst: Instance) -> TrialResult:
    g = build_bouquet(inst.words, inst.alphabet)
    f, _ = fold(g)
    fast = canonical_form(f)
    slow = canonical_form(naive_fold_words(inst.words, inst.alphabet))
    forest = g.forest
    return TrialResult(
        inst.seed, fast == slow, fast, slow, forest.operations, forest.traversals, len(forest)
    )


def verify_against_oracle(
    trials: int,
    ranks: tuple[int, int] = (1, 4),
    generators: tuple[int, int] = (1, 6),
    lengths: tuple[int, int] = (1, 30),
    seed: int = 0,
) -> OracleReport:
    """Compare fast folding with the naive oracle on seeded random bouquets."""
    results = [
        check_instance(inst)
        for inst in oracle_instances(trials, seed, ranks, generators, lengths)
    ]
    passed = sum(r.passed for r in results)
    return OracleReport(passed, len(results) - passed, results)


@dataclass(frozen=True)
class ScalingRow:
    N: int
    time_ns: int
    ns_per_N: float
    ns_per_NlogstarN: float
    dsf_traversals: int
    # (traversals, operations, nodes) of every rep
    counters: tuple[tuple[int, int, int], ...] = ()

    def within_amortized_bound(self) -> bool:
        return all(t <= amortized_bound(ops, n) for t, ops, n in self.counters)

    def tsv(self) -> str:
        return (
            f"{self.N}\t{self.time_ns}\t{self.ns_per_N:.3f}\t"
            f"{self.ns_per_NlogstarN:.3f}\t{self.dsf_traversals}"
        )


def time_fold(words: Sequence[Word], alphabet: Alphabet) -> tuple[int, object]:
    """Wall time in ns of bouquet construction plus folding.

    Pending garbage is collected first and the collector stays paused while
    the clock runs.
    """
    gc.collect()
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        g = build_bouquet(words, alphabet)
        fold(g, record=False)
        elapsed = time.perf_counter_ns() - t0
    finally:
        if enabled:
            gc.enable()
    return elapsed, g


def run_scaling(
    sizes: Sequence[int],
    reps: int = 5,
    seed: int = 0,
    rank: int = 2,
    word_length: int | None = None,
    repeats: int = 1,
) -> list[ScalingRow]:
    """Fold ``reps`` seeded random instances of total length ``N`` per size.

    By default each instance is one word of length ``N``; with
    ``word_length`` it is ``N // word_length`` words of that length, which
    forces heavy folding.

    With ``repeats > 1`` every instance is timed that many times in
    interleaved passes over all sizes, so a slow stretch of the machine hits
    every size alike.  The reported time is the median of all ``reps *
    repeats`` runs of a size; the traversal column is the maximum.
    """
    alphabet = Alphabet(rank)
    instances = []
    for N in sizes:
        for rep in range(reps):
            rng = random.Random(f"{seed}:{N}:{rep}")
            if word_length is None:
                words = [random_reduced_word(N, rank, rng)]
            else:
                words = [
                    random_reduced_word(word_length, rank, rng)
                    for _ in range(N // word_length)
                ]
            instances.append((N, words))

    times: list[list[int]] = [[] for _ in instances]
    counters: list[tuple[int, int, int]] = [(0, 0, 0)] * len(instances)
    for _ in range(repeats):
        for i, (_, words) in enumerate(instances):
            elapsed, g = time_fold(words, alphabet)
            times[i].append(elapsed)
            counters[i] = (g.forest.traversals, g.forest.operations, len(g.forest))
            del g

    rows = []
    for k, N in enumerate(sizes):
        idx = range(k * reps, (k + 1) * reps)
        t = int(statistics.median(x for i in idx for x in times[i]))
        per_rep = tuple(counters[i] for i in idx)
        actual = N if word_length is None else (N // word_length) * word_length
        rows.append(
            ScalingRow(
                actual,
                t,
                t / actual,
                t / (actual * (log_star(actual) + 1)),
                max(c[0] for c in per_rep),
                per_rep,
            )
        )
    return rows


def doubling_ratios(rows: Sequence[ScalingRow]) -> list[float]:
    return [b.time_ns / a.time_ns for a, b in zip(rows, rows[1:])]


def format_tsv(rows: Sequence[ScalingRow]) -> str:
    return "\n".join([TSV_HEADER, *(r.tsv() for r in rows)]) + "\n"
