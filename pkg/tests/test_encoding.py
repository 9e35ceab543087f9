import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from hyperboot.encoding import DomainError, all_jsets, rank_jset, unrank_jset


def colex_order(n, j):
    # independent of the ranking formula: sort by the reversed tuple
    return sorted(itertools.combinations(range(1, n + 1), j), key=lambda s: tuple(reversed(s)))


def test_smallest_and_largest():
    assert rank_jset((1, 2), 5) == 0
    assert rank_jset((4, 5), 5) == 9


def test_rank_24_matches_enumeration():
    order = colex_order(5, 2)
    assert order.index((2, 4)) == 4
    assert rank_jset((2, 4), 5) == 4
    assert unrank_jset(4, 5, 2) == (2, 4)


@pytest.mark.parametrize("n,j", [(5, 2), (6, 3), (7, 1), (7, 4), (4, 0)])
def test_rank_is_colex_bijection(n, j):
    order = colex_order(n, j)
    assert [rank_jset(s, n) for s in order] == list(range(comb(n, j)))
    assert [unrank_jset(i, n, j) for i in range(comb(n, j))] == order
    assert list(all_jsets(n, j)) == order


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))).flatmap(
    lambda nj: st.tuples(st.just(nj[0]), st.just(nj[1]), st.integers(0, comb(nj[0], nj[1]) - 1))))
def test_unrank_rank_roundtrip(args):
    n, j, r = args
    s = unrank_jset(r, n, j)
    assert len(s) == j and list(s) == sorted(set(s))
    assert rank_jset(s, n) == r


@pytest.mark.parametrize("bad", [(0, 2), (2, 2), (3, 2), (1, 6)])
def test_rank_domain_errors(bad):
    with pytest.raises(DomainError):
        rank_jset(bad, 5)


def test_unrank_out_of_range():
    with pytest.raises(DomainError):
        unrank_jset(10, 5, 2)
    with pytest.raises(DomainError):
        unrank_jset(-1, 5, 2)
