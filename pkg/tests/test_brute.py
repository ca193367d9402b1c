import pytest

from incpat.brute import (
    clusters,
    is_cluster,
    occurrences,
    oracle_cluster_poly,
    oracle_count,
    oracle_weight,
    words_of_multiset,
)
from incpat.enumeration import denom_coeff, p_poly
from incpat.multiset import multinomial
from incpat.tpoly import TPoly

t = TPoly.t()


@pytest.mark.parametrize(
    "word, r, expected",
    [([8, 3, 1, 4, 5, 6, 1, 7, 8], 3, 3), ([1, 2, 3, 4], 3, 2), ([2, 1], 3, 0), ([1, 1, 2], 2, 1), ([], 2, 0)],
)
def test_occurrences(word, r, expected):
    assert occurrences(word, r) == expected


def test_occurrences_against_window_definition():
    import itertools

    for w in itertools.product(range(1, 4), repeat=6):
        for r in (2, 3, 4):
            direct = sum(
                all(w[i + j] < w[i + j + 1] for j in range(r - 1)) for i in range(len(w) - r + 1)
            )
            assert occurrences(w, r) == direct


def test_words_of_multiset_small():
    assert list(words_of_multiset((2, 1))) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert list(words_of_multiset(())) == [()]
    assert len(list(words_of_multiset((1, 1, 1)))) == 6


@pytest.mark.parametrize("m", [(2, 2, 2), (3, 1, 1), (2, 1, 1, 1), (4,), (1,) * 5])
def test_words_distinct_sorted_and_complete(m):
    ws = list(words_of_multiset(m))
    assert ws == sorted(set(ws))
    assert len(ws) == multinomial(m)


def test_oracle_examples():
    assert oracle_count((1, 1, 1), 3) == 5
    assert oracle_count((2, 1), 3) == 3
    assert oracle_count((1, 1, 1, 1), 2) == 1
    assert oracle_weight((1, 1, 1), 3) == 5 + t
    assert oracle_weight((2, 1), 3) == 3
    assert oracle_weight((1, 1), 2) == 1 + t


def test_oracle_specializations(small_grid):
    for m in small_grid:
        if sum(m) > 6:
            continue
        for r in (2, 3):
            g = oracle_weight(m, r)
            assert g(0) == oracle_count(m, r)
            assert g(1) == multinomial(m)


def test_cluster_examples():
    assert oracle_cluster_poly(3, 3) == t - 1
    assert oracle_cluster_poly(4, 3) == (t - 1) ** 2
    assert oracle_cluster_poly(2, 3) == 0
    # r=4, k=6: second mark starts at 2 or 3
    assert sorted(clusters(6, 4)) == [(1, 2, 3), (1, 3)]
    assert oracle_cluster_poly(6, 4)(0) == -oracle_cluster_poly(5, 4)(0) - oracle_cluster_poly(4, 4)(0)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_clusters_are_valid(r):
    for k in range(1, 11):
        seen = set()
        for c in clusters(k, r):
            assert is_cluster(c, k, r)
            assert c not in seen
            seen.add(c)


def test_is_cluster_rejects():
    assert not is_cluster((1, 4), 6, 3)  # marks [1,3],[4,6] do not overlap
    assert not is_cluster((2, 3), 5, 3)
    assert not is_cluster((1, 2), 6, 3)  # does not reach the end
    assert is_cluster((1, 2, 4), 6, 3)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_cluster_poly_matches_recurrence(r):
    for k in range(1, 11):
        assert oracle_cluster_poly(k, r) == p_poly(k, r)
        if k >= r:
            assert oracle_cluster_poly(k, r)(0) == -denom_coeff(k, r)
