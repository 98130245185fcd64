from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from kneser_extremal.setcore import (
    FamilyMember,
    GroundParams,
    binom,
    colex_rank,
    colex_unrank,
    enumerate_all,
)


def product_binom(n, k):
    # factorial-free product/divide; each partial product is itself a binomial
    if k < 0 or k > n:
        return 0
    r = 1
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


def colex_sorted(n, k):
    return sorted(combinations(range(1, n + 1), k), key=lambda s: tuple(reversed(s)))


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (4, 1, 4), (99, 2, 4851)])
def test_binom_examples(n, k, expected):
    assert binom(n, k) == expected
    assert product_binom(n, k) == expected


def test_binom_zero_outside_range():
    assert binom(3, 5) == 0
    assert binom(-1, 0) == 0


def test_pascal_identity_up_to_200():
    for n in range(1, 201):
        for k in range(1, n + 1):
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


def test_rank_examples():
    p = GroundParams(5, 2)
    assert colex_rank(FamilyMember.of(p, [1, 2])) == 0
    assert colex_rank(FamilyMember.of(p, [4, 5])) == 9
    assert colex_sorted(5, 2).index((4, 5)) == 9
    assert colex_rank(FamilyMember.of(GroundParams(6, 3), [1, 2, 3])) == 0


def test_unrank_examples():
    p = GroundParams(5, 2)
    assert colex_unrank(0, p).elements == (1, 2)
    assert colex_unrank(9, p).elements == (4, 5)
    for n, k in [(5, 2), (9, 4), (12, 12), (7, 1)]:
        q = GroundParams(n, k)
        assert colex_unrank(q.size - 1, q).elements == tuple(range(n - k + 1, n + 1))


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        colex_unrank(10, GroundParams(5, 2))
    with pytest.raises(ValueError):
        colex_unrank(-1, GroundParams(5, 2))


@pytest.mark.parametrize("n,k,count", [(4, 2, 6), (5, 2, 10), (10, 3, 120)])
def test_enumerate_counts(n, k, count):
    members = list(enumerate_all(GroundParams(n, k)))
    assert len(members) == count == product_binom(n, k)


@pytest.mark.parametrize("n,k", [(5, 2), (7, 3), (8, 4), (10, 3)])
def test_enumeration_matches_colex_oracle(n, k):
    p = GroundParams(n, k)
    got = [m.elements for m in enumerate_all(p)]
    assert got == colex_sorted(n, k)
    assert [colex_rank(m) for m in enumerate_all(p)] == list(range(p.size))


@pytest.mark.parametrize("n,k", [(6, 3), (10, 5), (12, 4), (20, 3)])
def test_rank_unrank_exhaustive(n, k):
    p = GroundParams(n, k)
    for r in range(p.size):
        assert colex_rank(colex_unrank(r, p)) == r
    for m in enumerate_all(p):
        assert colex_unrank(colex_rank(m), p) == m


@given(st.integers(1, 64).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))).flatmap(
    lambda nk: st.tuples(st.just(nk), st.integers(0, binom(*nk) - 1))))
def test_rank_unrank_roundtrip_wide(args):
    (n, k), r = args
    p = GroundParams(n, k)
    m = colex_unrank(r, p)
    assert m.bits.bit_count() == k
    assert colex_rank(m) == r


def test_params_validation():
    with pytest.raises(ValueError):
        GroundParams(3, 4)
    with pytest.raises(ValueError):
        GroundParams(65, 2)
    with pytest.raises(ValueError):
        GroundParams(5, 0)


def test_member_validation():
    p = GroundParams(5, 2)
    with pytest.raises(ValueError):
        FamilyMember.of(p, [1, 6])
    with pytest.raises(ValueError):
        FamilyMember.of(p, [1, 2, 3])
    with pytest.raises(ValueError):
        FamilyMember(0b111, p)
    assert 3 in FamilyMember.of(p, [3, 5])
