"""Command-line interface.

Exit codes: 0 success (and "is a member"), 1 "not a member", 2 usage error,
3 input parse error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from typing import TextIO

from ._validation import check_word
from .bench import doubling_ratios, format_tsv, run_scaling
from .estimator import SubgroupGraph
from .serialization import WRITERS
from .words import Alphabet, ParseError, Word, format_word, free_reduce, parse_word

EXIT_OK = 0
EXIT_NOT_MEMBER = 1
EXIT_USAGE = 2
EXIT_PARSE = 3

COMMANDS = ("fold", "member", "index", "basis", "transversal", "bench")
DEFAULT_SIZES = (2**16, 2**17, 2**18, 2**19, 2**20)


class InputError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    input: str | None = None
    word: str | None = None
    format: str = "text"
    trace: str | None = None
    seed: int = 0
    sizes: tuple[int, ...] = DEFAULT_SIZES
    trials: int = 5


def parse_input_text(text: str) -> tuple[Alphabet, list[Word]]:
    """Parse generator-file contents.

    ``#`` lines are comments and blank lines are skipped.  The first
    remaining line may be ``alphabet: <letters>``; without it the rank is the
    highest generator used.  Every other line is one generator word.
    """
    alphabet = None
    words = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("alphabet:"):
            if seen_content:
                raise InputError(f"line {lineno}: alphabet directive must come first")
            try:
                alphabet = Alphabet.from_letters(line.split(":", 1)[1])
            except ValueError as exc:
                raise InputError(f"line {lineno}: {exc}") from exc
            seen_content = True
            continue
        seen_content = True
        try:
            words.append(free_reduce(parse_word(line, alphabet)))
        except ParseError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
    if alphabet is None:
        alphabet = Alphabet(max([1, *(w.max_generator() for w in words)]))
    return alphabet, words


def parse_input_file(path: str) -> tuple[Alphabet, list[Word]]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_input_text(text)


def _fit(job: JobSpec) -> SubgroupGraph:
    alphabet, words = parse_input_file(job.input)
    if not words:
        raise InputError("no generators")
    return SubgroupGraph(alphabet=alphabet, record_trace=job.trace is not None).fit(words)


def run(job: JobSpec, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        if job.command == "bench":
            rows = run_scaling(job.sizes, job.trials, job.seed)
            out.write(format_tsv(rows))
            for a, b, r in zip(rows, rows[1:], doubling_ratios(rows)):
                err.write(f"# time({b.N})/time({a.N}) = {r:.3f}\n")
            return EXIT_OK

        if job.input is None:
            err.write(f"error: {job.command} requires --input\n")
            return EXIT_USAGE
        if job.command == "member" and job.word is None:
            err.write("error: member requires --word\n")
            return EXIT_USAGE
        est = _fit(job)

        if job.command == "fold":
            out.write(WRITERS[job.format](est.graph_))
            if job.trace is not None:
                with open(job.trace, "w", encoding="utf-8") as fh:
                    fh.write(est.trace_.to_text(est.alphabet_))
        elif job.command == "member":
            try:
                w = check_word(job.word, est.alphabet_)
            except ParseError as exc:
                raise InputError(f"--word: {exc}") from exc
            member = est.contains(w)
            out.write("true\n" if member else "false\n")
            return EXIT_OK if member else EXIT_NOT_MEMBER
        elif job.command == "index":
            out.write("infinite\n" if math.isinf(est.index_) else f"{est.index_}\n")
        elif job.command == "basis":
            out.writelines(format_word(w) + "\n" for w in est.basis_)
        elif job.command == "transversal":
            if math.isinf(est.index_):
                err.write("warning: infinite index; words label vertices of the core graph only\n")
            out.writelines(format_word(w) + "\n" for w in est.transversal_)
        else:
            err.write(f"error: unknown command {job.command!r}\n")
            return EXIT_USAGE
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    return EXIT_OK


def _sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size list {text!r}") from None
    if not sizes or any(s <= 0 for s in sizes) or list(sizes) != sorted(sizes):
        raise argparse.ArgumentTypeError("sizes must be positive and ascending")
    return sizes


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stallings",
        description="Fold subgroups of free groups and query the folded graph.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="generator file, one word per line")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("fold", parents=[common], help="print the folded graph")
    p.add_argument("--format", choices=sorted(WRITERS), default="text")
    p.add_argument("--trace", metavar="FILE", help="write one line per elementary folding")

    p = sub.add_parser("member", parents=[common], help="membership test (exit 0 iff member)")
    p.add_argument("--word", metavar="W", help="query word, e.g. aBA; 1 is the empty word")

    sub.add_parser("index", parents=[common], help="index of the subgroup")
    sub.add_parser("basis", parents=[common], help="free basis from a spanning tree")
    sub.add_parser("transversal", parents=[common], help="Schreier transversal")

    p = sub.add_parser("bench", help="scaling measurements as TSV")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--sizes", type=_sizes, default=DEFAULT_SIZES, metavar="CSV")
    p.add_argument("--trials", type=int, default=5, metavar="N")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    job = JobSpec(
        command=args.command,
        input=getattr(args, "input", None),
        word=getattr(args, "word", None),
        format=getattr(args, "format", "text"),
        trace=getattr(args, "trace", None),
        seed=getattr(args, "seed", 0),
        sizes=getattr(args, "sizes", DEFAULT_SIZES),
        trials=getattr(args, "trials", 5),
    )
    if job.trials < 1:
        print("error: --trials must be positive", file=sys.stderr)
        return EXIT_USAGE
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
