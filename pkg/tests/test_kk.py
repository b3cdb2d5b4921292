from itertools import combinations
from math import comb

import pytest
from hypothesis import assume, given, strategies as st

from shadowspec.errors import DomainError
from shadowspec.kk import cascade, catalan_prefix, kk_min_shadow, lovasz_bound, min_squashed_flat_size
from shadowspec.setfam import level, shadow_set, squash_prefix


@given(st.integers(1, 5000), st.integers(1, 8))
def test_cascade_is_greedy_and_exact(t, k):
    c = cascade(t, k)
    assert c.value == t
    tops = [a for a, _ in c.terms]
    assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
    for a, i in c.terms:
        assert a >= i


def test_cascade_examples():
    assert cascade(5, 2).terms == ((3, 2), (2, 1))
    assert kk_min_shadow(5, 2) == 4
    assert kk_min_shadow(4, 3) == 6
    assert kk_min_shadow(0, 3) == 0
    with pytest.raises(DomainError):
        cascade(0, 2)


@given(st.integers(1, 300), st.integers(1, 6))
def test_kk_equals_squashed_prefix_shadow(t, k):
    assume(t <= comb(64, k))
    assert kk_min_shadow(t, k) == len(shadow_set(squash_prefix(k, t).members))


def test_kk_is_minimum_small():
    for n, k in [(5, 2), (6, 2), (5, 3)]:
        for t in range(1, 6):
            best = min(len(shadow_set(f)) for f in combinations(level(n, k), t))
            assert kk_min_shadow(t, k) == best


@given(st.integers(1, 200), st.integers(1, 8))
def test_lovasz_below_kk(t, k):
    assert lovasz_bound(t, k) <= kk_min_shadow(t, k) + 1e-9


def test_lovasz_exact_at_binomials():
    assert lovasz_bound(comb(7, 3), 3) == comb(7, 2)
    assert lovasz_bound(10, 2) == 5.0


def test_catalan_prefix():
    assert [catalan_prefix(l) for l in range(6)] == [0, 1, 3, 8, 22, 64]


def test_min_squashed_flat_size_examples():
    assert min_squashed_flat_size(10, 5) == (188, 76, [2, 4, 6, 8])
    assert min_squashed_flat_size(12, 5)[0] == 473
    with pytest.raises(DomainError):
        min_squashed_flat_size(5, 5)
