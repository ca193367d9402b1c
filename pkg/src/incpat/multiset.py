"""Multiplicity vectors: the letter counts of a word, up to relabelling."""

from __future__ import annotations

from math import factorial
from typing import Iterable

MultiplicityVector = tuple[int, ...]


def canonicalize(parts: Iterable[int]) -> MultiplicityVector:
    """Drop zeros and sort the remaining multiplicities in non-increasing order.

    >>> canonicalize([1, 2, 0, 1])
    (2, 1, 1)
    """
    parts = [int(p) for p in parts]
    for p in parts:
        if p < 0:
            raise ValueError(f"negative multiplicity {p} in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def multinomial(m: Iterable[int]) -> int:
    """Number of distinct words using letter ``i`` exactly ``m[i]`` times."""
    m = canonicalize(m)
    out = factorial(sum(m))
    for p in m:
        out //= factorial(p)
    return out


def check_pattern_length(r: int) -> int:
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"pattern length must be an integer >= 2, got {r!r}")
    return r
