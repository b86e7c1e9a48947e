"""Alphabets and words of a free group.

Letters are stored as signed integers: generator ``g`` (1-based) is ``g`` and
its inverse is ``-g``.  The text notation maps ``a`` to the first generator
and ``A`` to its inverse; the empty word is written ``1``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

MAX_RANK = 26


class ParseError(ValueError):
    """Raised when word text contains a character outside the alphabet."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or not 1 <= self.rank <= MAX_RANK:
            raise ValueError(f"alphabet rank must be in 1..{MAX_RANK}, got {self.rank!r}")

    @classmethod
    def from_letters(cls, letters: str) -> "Alphabet":
        """Alphabet spelled out as a prefix of ``abc...``, e.g. ``"abc"``."""
        letters = letters.strip()
        if not letters or letters != string.ascii_lowercase[: len(letters)]:
            raise ValueError(f"alphabet must be a prefix of a..z, got {letters!r}")
        return cls(len(letters))

    @property
    def letters(self) -> str:
        return string.ascii_lowercase[: self.rank]

    def letter(self, generator: int) -> str:
        return string.ascii_lowercase[generator - 1]


class Letter(NamedTuple):
    generator: int
    inverted: bool = False

    @property
    def code(self) -> int:
        return -self.generator if self.inverted else self.generator

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(abs(code), code < 0)


@dataclass(frozen=True)
class Word:
    """Finite sequence of signed letter codes.

    ``reduced`` is a marker set by :func:`free_reduce` (and by generators
    that cannot produce cancelling pairs).  ``bound``, when known, is an
    upper bound on every ``abs(code)`` so alphabet checks can skip the scan.
    Neither takes part in equality.
    """

    letters: tuple[int, ...] = ()
    reduced: bool = field(default=False, compare=False, repr=False)
    bound: int | None = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def __str__(self) -> str:
        return format_word(self)

    def as_letters(self) -> list[Letter]:
        return [Letter.from_code(x) for x in self.letters]

    def max_generator(self) -> int:
        letters = self.letters
        return max(max(letters), -min(letters)) if letters else 0

    def fits(self, rank: int) -> bool:
        """True iff every letter is a generator of rank ``rank`` or its inverse."""
        if self.bound is not None and self.bound <= rank:
            return True
        return self.max_generator() <= rank


def _letter_table() -> dict[str, int]:
    table = {}
    for i, ch in enumerate(string.ascii_lowercase, start=1):
        table[ch] = i
        table[ch.upper()] = -i
    return table


_CODES = _letter_table()


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse ``text`` into a word, without reducing it.

    Lowercase letters are generators, uppercase letters their inverses and
    ``"1"`` is the empty word.  With ``alphabet=None`` any of the 26 letters
    is accepted.
    """
    if text == "1":
        return Word((), reduced=True)
    limit = MAX_RANK if alphabet is None else alphabet.rank
    letters = []
    for pos, ch in enumerate(text):
        code = _CODES.get(ch)
        if code is None or abs(code) > limit:
            raise ParseError(f"invalid letter {ch!r} at position {pos}", pos)
        letters.append(code)
    return Word(tuple(letters), bound=limit)


def free_reduce(w: Word | Iterable[int]) -> Word:
    bound = None
    if isinstance(w, Word):
        if w.reduced:
            return w
        letters, bound = w.letters, w.bound
    else:
        letters = w
    stack: list[int] = []
    push, pop = stack.append, stack.pop
    for x in letters:
        if stack and stack[-1] == -x:
            pop()
        else:
            push(x)
    return Word(tuple(stack), reduced=True, bound=bound)


def invert_word(w: Word) -> Word:
    return Word(tuple(-x for x in reversed(w.letters)), reduced=w.reduced, bound=w.bound)


def format_word(w: Word | Iterable[int]) -> str:
    letters = w.letters if isinstance(w, Word) else tuple(w)
    if not letters:
        return "1"
    chars = []
    for x in letters:
        g = abs(x)
        if not 1 <= g <= MAX_RANK:
            raise FormatError(f"generator index {g} has no letter")
        ch = string.ascii_lowercase[g - 1]
        chars.append(ch if x > 0 else ch.upper())
    return "".join(chars)


def is_reduced(w: Word | Iterable[int]) -> bool:
    letters = w.letters if isinstance(w, Word) else tuple(w)
    return all(letters[i] != -letters[i + 1] for i in range(len(letters) - 1))
