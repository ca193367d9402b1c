"""Exact enumeration of words by occurrences of the increasing consecutive
pattern 12...r."""

from .brute import occurrences, oracle_cluster_poly, oracle_count, oracle_weight, words_of_multiset
from .enumeration import (
    count_avoiders,
    count_permutations,
    count_uniform,
    denom_coeff,
    p_poly,
    weight_enumerator,
    weight_uniform,
)
from .multiset import canonicalize, multinomial
from .tpoly import TPoly

__all__ = [
    "TPoly",
    "canonicalize",
    "count_avoiders",
    "count_permutations",
    "count_uniform",
    "denom_coeff",
    "multinomial",
    "occurrences",
    "oracle_cluster_poly",
    "oracle_count",
    "oracle_weight",
    "p_poly",
    "weight_enumerator",
    "weight_uniform",
    "words_of_multiset",
]
