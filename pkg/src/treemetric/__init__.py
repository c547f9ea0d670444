"""Metrics on rooted labeled trees.

Ordered, best-match and left-regular distances over level-m completed
trees, the lock-respecting best-match semimetric, two common-structure
baselines, a brute-force oracle, and a scaling benchmark.
"""

from ._backend import available as available_backends, get_backend, set_backend, using
from .baselines import d_bu, d_st, largest_common_forest, largest_common_subtree
from .best_match import d_bm, d_bm_star, equivalent, semi_equivalent, witness
from .labels import LabelAlphabet, WeightScheme, load_alphabet
from .left_regular import d_lr, is_left_regular, left_regularize, lex_compare
from .metrics import distance, distance_matrix
from .ordered import DistanceReport, d_ot
from .oracle import enumerate_embeddings, oracle_bm
from .trees import (
    NULL,
    CompletedTree,
    Tree,
    TreeError,
    TreeSyntaxError,
    complete,
    label_string,
    parse_tree,
    random_tree,
    read_tree,
    serialize,
    swap_children,
)

__version__ = "0.1.0"

__all__ = [
    "NULL", "CompletedTree", "DistanceReport", "LabelAlphabet", "Tree", "TreeError",
    "TreeSyntaxError", "WeightScheme", "available_backends", "complete", "d_bm", "d_bm_star",
    "d_bu", "d_lr", "d_ot", "d_st", "distance", "distance_matrix", "enumerate_embeddings",
    "equivalent", "get_backend", "is_left_regular", "label_string", "largest_common_forest",
    "largest_common_subtree", "left_regularize", "lex_compare", "load_alphabet", "oracle_bm",
    "parse_tree", "random_tree", "read_tree", "semi_equivalent", "serialize", "set_backend",
    "swap_children", "using", "witness",
]
