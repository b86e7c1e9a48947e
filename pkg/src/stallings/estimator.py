"""Scikit-learn style front end.

``fit`` folds the generators of a subgroup; ``predict`` answers membership
queries and ``transform`` reports where each query word ends up.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_alphabet, check_word, check_words
from .folded import canonical_form, canonicalize
from .folding import build_bouquet, fold
from .subgroup import analyze, is_member, trace


class SubgroupGraph(BaseEstimator):
    """Folded graph of the subgroup generated by the training words.

    Parameters
    ----------
    alphabet : int, str, Alphabet or None
        Rank of the free group, or its letters (``"ab"``).  ``None`` takes
        the highest generator seen in ``fit``.
    record_trace : bool
        Keep the list of elementary foldings in ``trace_``.

    Attributes
    ----------
    graph_ : FoldedGraph
        Canonically numbered folded graph; vertex 0 is the base.
    index_ : int or float
        Index of the subgroup (``math.inf`` when infinite).
    rank_ : int
        Rank of the subgroup.
    basis_, transversal_ : list of Word
    trace_ : FoldTrace or None

    Examples
    --------
    >>> est = SubgroupGraph(alphabet=2).fit(["aa", "b", "abA"])
    >>> est.index_
    2
    >>> est.predict(["a", "aa", "ab"]).tolist()
    [False, True, False]
    """

    def __init__(self, alphabet=None, record_trace=False):
        self.alphabet = alphabet
        self.record_trace = record_trace

    def fit(self, X, y=None):
        words = check_words(X, None if self.alphabet is None else check_alphabet(self.alphabet))
        alphabet = check_alphabet(self.alphabet, words)
        graph = build_bouquet(words, alphabet)
        folded, trace_ = fold(graph, record=self.record_trace)
        self.alphabet_ = alphabet
        self.n_generators_ = len(words)
        self.graph_ = canonicalize(folded)
        self.trace_ = trace_ if self.record_trace else None
        report = analyze(self.graph_)
        self.index_ = report.index
        self.rank_ = report.rank
        self.basis_ = report.basis
        self.transversal_ = report.transversal
        return self

    def predict(self, X):
        check_is_fitted(self, "graph_")
        words = check_words(X, self.alphabet_)
        return np.array([is_member(self.graph_, w) for w in words], dtype=bool)

    def transform(self, X):
        """Vertex reached by each word from the base, -1 if the walk leaves
        the graph."""
        check_is_fitted(self, "graph_")
        words = check_words(X, self.alphabet_)
        return np.array([trace(self.graph_, w)[0] for w in words], dtype=np.int64)

    def fit_transform(self, X, y=None):
        return self.fit(X).transform(X)

    def contains(self, word) -> bool:
        check_is_fitted(self, "graph_")
        return is_member(self.graph_, check_word(word, self.alphabet_))

    def canonical_form(self) -> str:
        check_is_fitted(self, "graph_")
        return canonical_form(self.graph_)
