"""Input validation helpers shared by the estimator and the CLI."""

from __future__ import annotations

from typing import Iterable

from .words import Alphabet, ParseError, Word, free_reduce, parse_word


def check_alphabet(alphabet, words: Iterable[Word] = ()) -> Alphabet:
    """Coerce ``alphabet`` (None, rank, letter string or Alphabet).

    With ``None`` the rank is the highest generator used by ``words``
    (at least 1).
    """
    if isinstance(alphabet, Alphabet):
        return alphabet
    if alphabet is None:
        return Alphabet(max([1, *(w.max_generator() for w in words)]))
    if isinstance(alphabet, str):
        return Alphabet.from_letters(alphabet)
    if isinstance(alphabet, int) and not isinstance(alphabet, bool):
        return Alphabet(alphabet)
    raise TypeError(f"cannot interpret {alphabet!r} as an alphabet")


def check_word(w, alphabet: Alphabet | None = None) -> Word:
    """Coerce a string, Word or sequence of signed codes to a reduced Word."""
    if isinstance(w, str):
        w = parse_word(w, alphabet)
    elif not isinstance(w, Word):
        try:
            w = Word(tuple(int(x) for x in w))
        except TypeError as exc:
            raise TypeError(f"cannot interpret {w!r} as a word") from exc
        if 0 in w.letters:
            raise ValueError("letter code 0 is not a generator")
    if alphabet is not None and not w.fits(alphabet.rank):
        raise ParseError(
            f"word {w!s} uses a generator outside an alphabet of rank {alphabet.rank}"
        )
    return free_reduce(w)


def check_words(X, alphabet: Alphabet | None = None) -> list[Word]:
    """Validate a collection of words; a bare string is rejected as ambiguous."""
    if isinstance(X, (str, Word)):
        raise TypeError("expected a collection of words, got a single word")
    return [check_word(w, alphabet) for w in X]
