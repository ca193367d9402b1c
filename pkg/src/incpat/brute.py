"""Definition-level ground truth: enumerate words and clusters directly.

Nothing in this module uses the generating-function recurrences; it exists to
check them. Cost is exponential, so keep word lengths to about 10.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Sequence

from .multiset import canonicalize
from .tpoly import TPoly


def occurrences(word: Sequence[int], r: int) -> int:
    """Count positions starting a strictly increasing run of length ``r``.

    >>> occurrences([8, 3, 1, 4, 5, 6, 1, 7, 8], 3)
    3
    """
    n = len(word)
    if n < r:
        return 0
    # run[i] = length of the strictly increasing factor ending at i
    count = 0
    run = 1
    for i in range(1, n):
        run = run + 1 if word[i - 1] < word[i] else 1
        if run >= r:
            count += 1
    return count


def words_of_multiset(m: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Yield every arrangement of ``1^m1 2^m2 ...`` once, in lexicographic order.

    Letter ``i + 1`` gets multiplicity ``m[i]`` of the canonical vector.
    """
    m = canonicalize(m)
    word = [letter for letter, mult in enumerate(m, start=1) for _ in range(mult)]
    n = len(word)
    while True:
        yield tuple(word)
        # next lexicographic permutation of a multiset
        i = n - 2
        while i >= 0 and word[i] >= word[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while word[j] <= word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1:] = reversed(word[i + 1:])


def oracle_count(m: Iterable[int], r: int) -> int:
    return sum(1 for w in words_of_multiset(m) if occurrences(w, r) == 0)


def oracle_weight(m: Iterable[int], r: int) -> TPoly:
    hist = Counter(occurrences(w, r) for w in words_of_multiset(m))
    if not hist:
        return TPoly()
    return TPoly(hist.get(j, 0) for j in range(max(hist) + 1))


def clusters(k: int, r: int) -> Iterator[tuple[int, ...]]:
    """Yield the mark start positions of every cluster on the word ``1 2 ... k``.

    Marks are the intervals ``[u, u + r - 1]``. The first starts at 1, each
    subsequent one starts inside the previous mark, and the last ends at ``k``.
    """
    if k < r:
        return
    last_start = k - r + 1

    def extend(starts: list[int]) -> Iterator[tuple[int, ...]]:
        u = starts[-1]
        if u == last_start:
            yield tuple(starts)
            return
        for v in range(u + 1, min(u + r - 1, last_start) + 1):
            starts.append(v)
            yield from extend(starts)
            starts.pop()

    yield from extend([1])


def is_cluster(starts: Sequence[int], k: int, r: int) -> bool:
    """Structural check: coverage of ``1..k`` and overlap of adjacent marks."""
    if not starts or starts[0] != 1 or starts[-1] + r - 1 != k:
        return False
    for a, b in zip(starts, starts[1:]):
        if not a < b <= a + r - 1:
            return False
    covered = set()
    for u in starts:
        covered.update(range(u, u + r))
    return covered == set(range(1, k + 1))


def oracle_cluster_poly(k: int, r: int) -> TPoly:
    """Sum of ``(t - 1)**(number of marks)`` over clusters on ``1 2 ... k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    hist = Counter(len(c) for c in clusters(k, r))
    t_minus_1 = TPoly((-1, 1))
    total = TPoly()
    for marks, n in hist.items():
        total = total + n * t_minus_1 ** marks
    return total
