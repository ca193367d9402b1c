"""Truncated multivariate power series and generating-function checks.

The counting recurrences are read off the reciprocals of symmetric-function
denominators. This module expands those reciprocals term by term and compares
coefficients against the recurrences. It also checks the exponential generating
function of the permutation counts with exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Any, Iterator, Optional

from .enumeration import (
    count_avoiders,
    count_permutations,
    denom_coeff,
    p_poly,
    weight_enumerator,
)
from .multiset import check_pattern_length
from .tpoly import TPoly

Exponent = tuple[int, ...]


class TruncatedSeries:
    """Sparse series in ``nvars`` variables, exact up to total degree ``cap``.

    ``terms`` maps exponent tuples to coefficients; coefficients may be ``int``
    or :class:`TPoly` (anything closed under ``+`` and ``*`` with ints).
    """

    __slots__ = ("nvars", "cap", "terms")

    def __init__(self, nvars: int, cap: int, terms: Optional[dict[Exponent, Any]] = None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        if cap < 0:
            raise ValueError("degree cap must be >= 0")
        self.nvars = nvars
        self.cap = cap
        self.terms: dict[Exponent, Any] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent {e}")
            if sum(e) <= cap and c != 0:
                self.terms[e] = c

    def __getitem__(self, e: Exponent):
        return self.terms.get(tuple(e), 0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nvars, self.cap, self.terms) == (other.nvars, other.cap, other.terms)

    def __repr__(self):
        return f"TruncatedSeries(nvars={self.nvars}, cap={self.cap}, {len(self.terms)} terms)"

    def _check_compat(self, other: "TruncatedSeries") -> int:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        return min(self.cap, other.cap)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = self._check_compat(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(self.nvars, cap, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.nvars, self.cap, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = self._check_compat(other)
        out: dict[Exponent, Any] = {}
        for ea, ca in self.terms.items():
            da = sum(ea)
            for eb, cb in other.terms.items():
                if da + sum(eb) > cap:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return TruncatedSeries(self.nvars, cap, out)

    @classmethod
    def one(cls, nvars: int, cap: int) -> "TruncatedSeries":
        return cls(nvars, cap, {(0,) * nvars: 1})


def _exponents_upto(nvars: int, cap: int) -> Iterator[Exponent]:
    """All exponent vectors of total degree <= cap, ordered by total degree."""
    def rec(prefix: list[int], left: int, slots: int):
        if slots == 0:
            if left == 0:
                yield tuple(prefix)
            return
        for a in range(left, -1, -1):
            prefix.append(a)
            yield from rec(prefix, left - a, slots - 1)
            prefix.pop()

    for d in range(cap + 1):
        yield from rec([], d, nvars)


def elementary_symmetric(nvars: int, k: int, cap: int) -> TruncatedSeries:
    """``e_k(x_1..x_nvars)`` truncated at total degree ``cap``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    terms = {}
    if k <= cap:
        for idx in combinations(range(nvars), k):
            e = [0] * nvars
            for i in idx:
                e[i] = 1
            terms[tuple(e)] = 1
    return TruncatedSeries(nvars, cap, terms)


def _symmetric_combination(nvars: int, cap: int, coeff_of_k) -> TruncatedSeries:
    out = TruncatedSeries(nvars, cap)
    for k in range(0, min(nvars, cap) + 1):
        c = coeff_of_k(k)
        if c != 0:
            ek = elementary_symmetric(nvars, k, cap)
            out = out + TruncatedSeries(nvars, cap, {e: c * v for e, v in ek.terms.items()})
    return out


def avoidance_denominator(nvars: int, r: int, cap: int) -> TruncatedSeries:
    """``sum_k c_k e_k`` with ``c_k`` in {-1, 0, 1}: the avoidance denominator."""
    check_pattern_length(r)
    return _symmetric_combination(nvars, cap, lambda k: denom_coeff(k, r))


def weighted_denominator(nvars: int, r: int, cap: int) -> TruncatedSeries:
    """``1 - e_1 - sum_{k>=r} P_k(t) e_k`` with :class:`TPoly` coefficients."""
    check_pattern_length(r)

    def coeff(k):
        if k == 0:
            return TPoly((1,))
        if k == 1:
            return TPoly((-1,))
        return -p_poly(k, r) if k >= r else TPoly()

    return _symmetric_combination(nvars, cap, coeff)


def expand_reciprocal(den: TruncatedSeries) -> TruncatedSeries:
    """Solve ``S * den = 1`` up to the degree cap of ``den``.

    Requires constant term exactly 1; coefficients are then solved in order of
    total degree, ``S_v = -sum_{0 < u <= v} den_u * S_{v-u}``.
    """
    zero = (0,) * den.nvars
    if den[zero] != 1:
        raise ValueError("reciprocal needs a constant term equal to 1")
    nonconst = [(u, c) for u, c in den.terms.items() if u != zero]
    out: dict[Exponent, Any] = {}
    for v in _exponents_upto(den.nvars, den.cap):
        if v == zero:
            out[v] = 1
            continue
        acc = 0
        for u, c in nonconst:
            w = tuple(a - b for a, b in zip(v, u))
            if min(w) < 0:
                continue
            sw = out.get(w)
            if sw is not None:
                acc = acc + c * sw
        out[v] = -acc
    return TruncatedSeries(den.nvars, den.cap, out)


@dataclass
class VerificationReport:
    """Outcome of a check; ``mismatch`` holds the first failing key."""

    name: str
    passed: bool
    checked: int = 0
    mismatch: Optional[Any] = None
    expected: Any = None
    actual: Any = None

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.name}: {self.checked} checks agree"
        return (
            f"FAIL {self.name}: at {self.mismatch} expected {self.expected}, "
            f"got {self.actual}"
        )


def verify_against_recurrence(nvars: int, r: int, cap: int, weighted: bool = False) -> VerificationReport:
    """Expand the reciprocal denominator and compare every coefficient with the
    recurrence value for the matching multiplicity vector."""
    check_pattern_length(r)
    den = weighted_denominator(nvars, r, cap) if weighted else avoidance_denominator(nvars, r, cap)
    series = expand_reciprocal(den)
    name = f"{'weighted' if weighted else 'avoidance'} series nvars={nvars} r={r} degree<={cap}"
    checked = 0
    for e in _exponents_upto(nvars, cap):
        got = series[e]
        want = weight_enumerator(e, r) if weighted else count_avoiders(e, r)
        if got != want:
            return VerificationReport(name, False, checked, e, want, got)
        checked += 1
    return VerificationReport(name, True, checked)


def egf_denominator(r: int, N: int) -> list[Fraction]:
    """Coefficients of ``1 - x + x^r/r! - x^(r+1)/(r+1)! + ...`` up to ``x^N``."""
    return [Fraction(denom_coeff(k, r), factorial(k)) for k in range(N + 1)]


def egf_check(r: int, N: int) -> VerificationReport:
    """Multiply ``sum a_r(n) x^n / n!`` by the EGF denominator and confirm the
    product is ``1 + O(x^(N+1))``, exactly."""
    check_pattern_length(r)
    if N < 0:
        raise ValueError("N must be non-negative")
    a = [Fraction(count_permutations(n, r), factorial(n)) for n in range(N + 1)]
    d = egf_denominator(r, N)
    name = f"egf r={r} N={N}"
    for n in range(N + 1):
        prod = sum(a[i] * d[n - i] for i in range(n + 1))
        want = 1 if n == 0 else 0
        if prod != want:
            return VerificationReport(name, False, n, n, Fraction(want), prod)
    return VerificationReport(name, True, N + 1)
