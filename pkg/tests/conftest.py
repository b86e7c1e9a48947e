import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from stallings import Alphabet, parse_word  # noqa: E402

EXAMPLE = ["abba", "Aba", "aaa"]
INDEX_TWO = ["aa", "b", "abA"]


@pytest.fixture
def rank2():
    return Alphabet(2)


@pytest.fixture
def example_words(rank2):
    return [parse_word(w, rank2) for w in EXAMPLE]


@pytest.fixture
def index_two_words(rank2):
    return [parse_word(w, rank2) for w in INDEX_TWO]


@pytest.fixture
def rng():
    return random.Random(20261019)


def letters(rank):
    gens = st.integers(1, rank)
    return st.builds(lambda g, neg: -g if neg else g, gens, st.booleans())


@st.composite
def word_lists(draw, max_rank=4, max_words=6, max_len=12):
    rank = draw(st.integers(1, max_rank))
    words = draw(
        st.lists(st.lists(letters(rank), max_size=max_len), min_size=0, max_size=max_words)
    )
    return rank, [tuple(w) for w in words]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
