"""Exact counting of words by occurrences of the consecutive pattern 12...r.

Everything here derives from the reciprocal of

    1 - e_1 + e_r - e_{r+1} + e_{2r} - e_{2r+1} + ...

(avoidance) or of ``1 - e_1 - sum_{k>=r} P_k(t) e_k`` (weight enumerator).
Reading off coefficients gives a recurrence that removes one copy of each of
``k`` distinct letters at a time. Because the counts are symmetric in the
multiplicities, states are kept in canonical form and the ``k`` removed letters
are chosen per class of equal multiplicities with binomial weights.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Union

from .multiset import MultiplicityVector, canonicalize, check_pattern_length
from .tpoly import TPoly

Coeff = Union[int, TPoly]

_T_MINUS_1 = TPoly((-1, 1))


def denom_coeff(k: int, r: int) -> int:
    """Coefficient of ``e_k`` in the avoidance denominator: +1, -1 or 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 1
    if k == 1:
        return -1
    q, rem = divmod(k, r)
    if q >= 1 and rem == 0:
        return 1
    if q >= 1 and rem == 1:
        return -1
    return 0


@lru_cache(maxsize=None)
def p_poly(k: int, r: int) -> TPoly:
    """Cluster weight polynomial attached to ``e_k`` for the pattern 12...r.

    Zero for ``k < r``, ``t - 1`` at ``k == r`` and
    ``(t - 1) * (P_{k-1} + ... + P_{k-r+1})`` beyond.
    """
    check_pattern_length(r)
    if k < 1:
        raise ValueError("k must be >= 1")
    if k < r:
        return TPoly()
    if k == r:
        return _T_MINUS_1
    # fill bottom-up so deep k never recurses far
    for j in range(r + 1, k):
        p_poly(j, r)
    acc = TPoly()
    for i in range(1, r):
        if k - i >= r:
            acc = acc + p_poly(k - i, r)
    return _T_MINUS_1 * acc


def _avoid_coeffs(r: int, kmax: int) -> dict[int, int]:
    out = {}
    for k in range(1, kmax + 1):
        c = -denom_coeff(k, r)
        if c:
            out[k] = c
    return out


def _weight_coeffs(r: int, kmax: int) -> dict[int, Coeff]:
    out: dict[int, Coeff] = {1: 1}
    for k in range(r, kmax + 1):
        out[k] = p_poly(k, r)
    return out


# ---------------------------------------------------------------------------
# arbitrary multiplicity vectors


def _children(m: MultiplicityVector):
    """Yield ``(k, ways, child)`` for every way of removing one copy of each of
    ``k >= 1`` distinct letters from ``m``.

    ``ways`` counts the 0-1 vectors collapsing onto the same canonical child.
    """
    classes: list[tuple[int, int]] = []
    for p in m:
        if classes and classes[-1][0] == p:
            classes[-1] = (p, classes[-1][1] + 1)
        else:
            classes.append((p, 1))
    for picks in product(*(range(c + 1) for _, c in classes)):
        k = sum(picks)
        if not k:
            continue
        ways = 1
        child: list[int] = []
        for (value, count), i in zip(classes, picks):
            ways *= comb(count, i)
            child.extend([value] * (count - i))
            child.extend([value - 1] * i)
        yield k, ways, canonicalize(child)


@lru_cache(maxsize=None)
def _avoiders(m: MultiplicityVector, r: int) -> int:
    if not m:
        return 1
    coeffs = _avoid_coeffs(r, len(m))
    total = 0
    for k, ways, child in _children(m):
        c = coeffs.get(k)
        if c:
            total += c * ways * _avoiders(child, r)
    return total


@lru_cache(maxsize=None)
def _weights(m: MultiplicityVector, r: int) -> TPoly:
    if not m:
        return TPoly((1,))
    coeffs = _weight_coeffs(r, len(m))
    by_k: dict[int, TPoly] = {}
    for k, ways, child in _children(m):
        if k in coeffs:
            by_k[k] = by_k.get(k, TPoly()) + _weights(child, r) * ways
    total = TPoly()
    for k, acc in by_k.items():
        total = total + coeffs[k] * acc
    return total


def count_avoiders(m: Iterable[int], r: int) -> int:
    """Number of arrangements of the multiset ``m`` with no factor
    ``w_i < w_{i+1} < ... < w_{i+r-1}``.

    >>> count_avoiders([1, 1, 1, 1], 3)
    17
    """
    check_pattern_length(r)
    return _avoiders(canonicalize(m), r)


def weight_enumerator(m: Iterable[int], r: int) -> TPoly:
    """Sum of ``t**(number of occurrences of 12...r)`` over all arrangements of ``m``."""
    check_pattern_length(r)
    return _weights(canonicalize(m), r)


# ---------------------------------------------------------------------------
# permutations

_perm_cache: dict[int, list[int]] = {}


def count_permutations(n: int, r: int) -> int:
    """Permutations of length ``n`` avoiding the consecutive pattern 12...r.

    Uses ``a(n) = sum_k -c_k * C(n, k) * a(n - k)`` with ``c_k`` the
    denominator coefficients; every earlier term is cached.
    """
    check_pattern_length(r)
    if n < 0:
        raise ValueError("n must be non-negative")
    seq = _perm_cache.setdefault(r, [1])
    while len(seq) <= n:
        j = len(seq)
        val = 0
        for k in range(1, j + 1):
            c = denom_coeff(k, r)
            if c:
                val -= c * comb(j, k) * seq[j - k]
        seq.append(val)
    return seq[n]


# ---------------------------------------------------------------------------
# uniform multiplicities: words in 1^s 2^s ... n^s

# A profile (k_s, ..., k_1) counts letters by how many copies remain unplaced.
# Removing one copy of a letter moves it from class j to class j - 1.


class _ProfileRecurrence:
    def __init__(self, s: int, coeffs_for):
        self.s = s
        self.coeffs_for = coeffs_for
        self.memo: dict[tuple[int, ...], Coeff] = {(0,) * s: 1}
        self.binom: list[list[int]] = [[1]]

    def _binom_row(self, n: int) -> list[int]:
        while len(self.binom) <= n:
            j = len(self.binom)
            self.binom.append([comb(j, i) for i in range(j + 1)])
        return self.binom[n]

    def _choices(self, profile, coeffs, kmax):
        """Yield ``(k, ways, child)`` over all per-class pick counts."""
        s = self.s
        rows = [self._binom_row(c) for c in profile]
        picks = [0] * s
        # depth-first over classes, pruning once k exceeds the largest useful k
        def rec(pos, k, ways):
            if pos == s:
                if k and k in coeffs:
                    child = tuple(
                        profile[j] - picks[j] + (picks[j - 1] if j else 0) for j in range(s)
                    )
                    yield k, ways, child
                return
            row = rows[pos]
            for i in range(min(profile[pos], kmax - k) + 1):
                picks[pos] = i
                yield from rec(pos + 1, k + i, ways * row[i])
            picks[pos] = 0

        yield from rec(0, 0, 1)

    def value(self, profile: tuple[int, ...]) -> Coeff:
        memo = self.memo
        if profile in memo:
            return memo[profile]
        # iterative post-order so long chains never hit the recursion limit
        stack = [profile]
        while stack:
            top = stack[-1]
            if top in memo:
                stack.pop()
                continue
            active = sum(top)
            coeffs = self.coeffs_for(active)
            kmax = max(coeffs) if coeffs else 0
            missing = []
            by_k: dict[int, Coeff] = {}
            for k, ways, child in self._choices(top, coeffs, kmax):
                v = memo.get(child)
                if v is None:
                    missing.append(child)
                elif not missing:
                    by_k[k] = by_k.get(k, 0) + ways * v
            if missing:
                stack.extend(missing)
                continue
            total: Coeff = 0
            for k, acc in by_k.items():
                total = total + coeffs[k] * acc
            memo[top] = total
            stack.pop()
        return memo[profile]


_uniform_cache: dict[tuple[int, int, bool], _ProfileRecurrence] = {}


def _profile_recurrence(s: int, r: int, weighted: bool) -> _ProfileRecurrence:
    key = (s, r, weighted)
    rec = _uniform_cache.get(key)
    if rec is None:
        table_cache: dict[int, dict] = {}

        def coeffs_for(active: int):
            tab = table_cache.get(active)
            if tab is None:
                tab = _weight_coeffs(r, active) if weighted else _avoid_coeffs(r, active)
                table_cache[active] = tab
            return tab

        rec = _uniform_cache.setdefault(key, _ProfileRecurrence(s, coeffs_for))
    return rec


def _check_uniform_args(s: int, n: int, r: int) -> None:
    check_pattern_length(r)
    if s < 1:
        raise ValueError("s must be >= 1")
    if n < 0:
        raise ValueError("n must be non-negative")


def count_uniform(s: int, n: int, r: int) -> int:
    """Words using each of ``1..n`` exactly ``s`` times that avoid 12...r.

    Runs in polynomial time for fixed ``s`` (states are the O(n^s) class
    profiles), e.g. ``count_uniform(2, n, 3)`` for n up to a few hundred.
    """
    _check_uniform_args(s, n, r)
    return _profile_recurrence(s, r, False).value((n,) + (0,) * (s - 1))


def weight_uniform(s: int, n: int, r: int) -> TPoly:
    """Weight enumerator in ``t`` of the words counted by :func:`count_uniform`."""
    _check_uniform_args(s, n, r)
    v = _profile_recurrence(s, r, True).value((n,) + (0,) * (s - 1))
    return v if isinstance(v, TPoly) else TPoly((v,))


def clear_caches() -> None:
    """Drop every memo table (mainly for timing runs)."""
    p_poly.cache_clear()
    _avoiders.cache_clear()
    _weights.cache_clear()
    _perm_cache.clear()
    _uniform_cache.clear()
