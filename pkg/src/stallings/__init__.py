"""Stallings folding of finitely generated subgroups of free groups."""

from .disjoint_sets import Forest
from .estimator import SubgroupGraph
from .folded import FoldedGraph, canonical_form, canonicalize
from .folding import (
    FoldEvent,
    FoldTrace,
    UnfoldedPair,
    build_bouquet,
    classify_vertex,
    fold,
    fold_arbitrary,
    fold_step,
    fold_words,
)
from .graph import Incidence, LabeledGraph
from .linked_lists import ListArena
from .naive import naive_fold, naive_fold_words
from .subgroup import (
    INFINITE,
    SubgroupReport,
    analyze,
    index,
    is_member,
    nielsen_basis,
    schreier_transversal,
    spanning_tree,
    subgroup_rank,
)
from .words import Alphabet, Letter, Word, format_word, free_reduce, invert_word, parse_word

__all__ = [
    "Alphabet",
    "FoldEvent",
    "FoldTrace",
    "FoldedGraph",
    "Forest",
    "INFINITE",
    "Incidence",
    "LabeledGraph",
    "Letter",
    "ListArena",
    "SubgroupGraph",
    "SubgroupReport",
    "UnfoldedPair",
    "Word",
    "analyze",
    "build_bouquet",
    "canonical_form",
    "canonicalize",
    "classify_vertex",
    "fold",
    "fold_arbitrary",
    "fold_step",
    "fold_words",
    "format_word",
    "free_reduce",
    "index",
    "invert_word",
    "is_member",
    "naive_fold",
    "naive_fold_words",
    "nielsen_basis",
    "parse_word",
    "schreier_transversal",
    "spanning_tree",
    "subgroup_rank",
]
