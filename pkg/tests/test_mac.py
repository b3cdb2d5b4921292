from math import comb

import pytest

from shadowspec import fixtures
from shadowspec.errors import DomainError, NotAchievable
from shadowspec.kk import min_squashed_flat_size
from shadowspec.mac import (
    MacWitness,
    brute_S,
    construct_large_mac,
    construct_mac,
    construct_mid_mac,
    enumerate_Y,
    flat_antichain,
    flat_recipes,
    full_level,
    interval_Ink,
    interval_Ink_closed,
    is_separated,
    lift_antichain,
    mac_from_family,
    missing_size_witness,
    n9_table_witnesses,
    phi,
    phi_via_theorem1,
    pinned_pair_antichain,
    separated_antichain,
    separated_claimed_window,
    separated_window,
    theorem1_member,
    w_fn,
)
from shadowspec.setfam import UniformFamily, elset, is_maximal_antichain, level


def test_w_values():
    assert [w_fn(n) for n in range(6, 13)] == [14, 23, 58, 111, 237, 438, 900]


def test_theorem1_member_examples():
    assert theorem1_member(6, 17)
    assert not theorem1_member(6, 16)
    for n in range(5, 13):
        assert theorem1_member(n, comb(n, (n + 1) // 2))


def test_mac_from_family_examples():
    w = mac_from_family(UniformFamily.from_sets(5, 3, [[1, 2, 3]]), 5, 3)
    assert (w.size, w.maximal) == (8, True)
    w = mac_from_family(UniformFamily(5, 3, tuple(level(4, 3))), 5, 3)
    assert (w.size, w.maximal) == (8, True)
    w = mac_from_family(UniformFamily(5, 3), 5, 3)
    assert w.size == 10 and w.maximal and w.census() == {2: 10}


def test_witness_rejects_comparable_sets():
    with pytest.raises(AssertionError):
        MacWitness.from_sets(3, [elset([1]), elset([1, 2])])


def test_witness_json_round_trip():
    w = construct_mac(6, 12)
    back = MacWitness.from_dict(w.to_dict())
    assert back.members() == w.members() and back.maximal
    assert w.to_dict()["size"] == 12


def test_construct_large_examples():
    assert construct_large_mac(9, 101).size == 101
    w = construct_large_mac(6, 17)
    assert w.census() == {3: 17 - 1, 4: 1}
    w = construct_large_mac(10, 247)
    assert w.census()[6] == 1
    with pytest.raises(NotAchievable) as info:
        construct_large_mac(9, 120)
    assert info.value.reason == {"reason": "certified non-size", "n": 9, "m": 120, "gap": 6}


def test_table_witnesses_n9():
    ws = n9_table_witnesses()
    assert sorted(ws) == list(range(101, 120)) + [121, 122]
    for m, w in ws.items():
        assert w.size == m and w.maximal


def test_edge_sets_are_triangle_free_with_stated_counts():
    for (t, c), edges in fixtures.EDGE_SETS.items():
        assert len(edges) == t
        adjacent = sum(1 for i, e in enumerate(edges) for f in edges[i + 1:] if set(e) & set(f))
        assert adjacent == c
        es = {frozenset(e) for e in edges}
        verts = {v for e in edges for v in e}
        for a in verts:
            for b in verts:
                for d in verts:
                    assert not ({frozenset((a, b)), frozenset((b, d)), frozenset((a, d))} <= es and len({a, b, d}) == 3)


def test_Y_examples():
    Y = enumerate_Y(7, 3)
    assert Y.min == 25 and 21 in Y.ksets_for(25)
    assert enumerate_Y(8, 4).min == 53
    assert enumerate_Y(9, 4).min == 81
    assert comb(9, 4) in enumerate_Y(9, 4).sizes


@pytest.mark.parametrize("n", range(7, 14))
def test_Y_gap_bound(n):
    for k in range(n // 2, n - 2):
        Y = enumerate_Y(n, k)
        sizes = [s for _, s in Y.entries]
        bound = max(k - 1, n - k)
        assert all(abs(b - a) <= bound for a, b in zip(sizes, sizes[1:]))


def test_min_Y_matches_formula():
    for n in range(9, 13):
        for k in range(5, n - 3):
            if n // 2 <= k:
                assert enumerate_Y(n, k).min == min_squashed_flat_size(n, k)[0]


def test_interval_examples():
    assert interval_Ink(7, 3) == (16, 29)
    assert interval_Ink(8, 4) == (41, 61)
    assert interval_Ink(9, 4) == (69, 117)
    assert interval_Ink(10, 6)[0] == 164
    with pytest.raises(DomainError):
        interval_Ink(6, 3)


def test_interval_closed_form_agrees():
    for n in range(9, 15):
        for k in range(5, n - 3):
            if 2 * k >= n - 1 and n // 2 <= k:
                assert interval_Ink_closed(n, k) == interval_Ink(n, k)


def test_mid_examples():
    w = construct_mid_mac(7, 16)
    assert w.size == 16 and w.census()[4] == 3 and "prefix 21" in w.origin
    w = construct_mid_mac(7, 29)
    assert w.size == 29 and "prefix 35" in w.origin


def test_separated_examples():
    w = separated_antichain(5, 2, 5)
    assert w.members() == level(5, 1)
    w = separated_antichain(4, 3, 3)
    assert is_separated(w, 3) and w.maximal
    assert separated_window(6, 3) == (10, 13)
    w = separated_antichain(6, 3, 12)
    assert w.size == 12 and is_separated(w, 3)


def test_separated_base_is_small():
    # on [k+1] only sizes k and k+1 are maximal and separated
    assert separated_window(5, 4) == (4, 5)
    assert separated_claimed_window(5, 4) == (4, 6)
    with pytest.raises(NotAchievable):
        separated_antichain(5, 4, 6)
    with pytest.raises(DomainError):
        separated_antichain(5, 4, 7)


def test_separated_sweep():
    for n in range(3, 10):
        for k in range(2, n):
            lo, hi = separated_window(n, k)
            for m in range(lo, hi + 1):
                w = separated_antichain(n, k, m)
                assert w.maximal and is_separated(w, k)


def test_pinned_pair_sweep():
    for n in range(4, 9):
        for k in range(3, n):
            for p in range(0, comb(n - 2, k - 2) + 1):
                assert pinned_pair_antichain(n, k, p).maximal


@pytest.mark.parametrize("n", range(2, 10))
def test_flat_recipes_build(n):
    for k in range(1, n + 1):
        for m in flat_recipes(n, k):
            w = flat_antichain(n, k, m)
            assert set(w.census()) <= {k - 1, k}


def test_lift_examples():
    A = construct_mac(5, 8)
    assert set(A.census()) == {2, 3}
    assert lift_antichain(A, "pad_low", 3).size == 8 + 5
    inner = construct_mac(7, 29)
    assert lift_antichain(inner, "add_pairs").size == 36
    A = full_level(5, 2)
    w = lift_antichain(A, "shift_up", 3)
    assert w.size == comb(5, 2) + comb(5, 3) == comb(6, 3)
    with pytest.raises(DomainError):
        lift_antichain(full_level(5, 1), "add_pairs")
    with pytest.raises(DomainError):
        lift_antichain(A, "sideways")


def test_phi_examples():
    assert phi(6) == 16
    assert phi(9) == 120
    assert [phi(n) for n in range(1, 13)] == [2, 3, 4, 5, 9, 16, 33, 64, 120, 241, 454, 905]
    assert phi(100) == comb(100, 50) - 557
    for n in range(7, 13):
        assert phi_via_theorem1(n) == phi(n)


def test_missing_size_witness():
    assert missing_size_witness(9) == 120
    assert missing_size_witness(10) == 246
    for n in range(5, 16):
        assert not theorem1_member(n, missing_size_witness(n))


def test_brute_examples():
    assert set(brute_S(3)) == {1, 2, 3}
    assert str(brute_S(4)) == "[1,4] ∪ {6}"
    assert str(brute_S(6)) == "[1,15] ∪ {17} ∪ {20}"
    with pytest.raises(DomainError):
        brute_S(7)
    with pytest.raises(DomainError):
        brute_S(8)


@pytest.mark.parametrize("n", range(0, 6))
def test_brute_methods_agree(n):
    assert brute_S(n, method="all") == brute_S(n, method="cliques")


@pytest.mark.parametrize("n", range(1, 7))
def test_pipeline_matches_brute_force(n):
    oracle = set(brute_S(n))
    built = set()
    for m in range(1, comb(n, n // 2) + 1):
        try:
            w = construct_mac(n, m)
        except NotAchievable:
            continue
        assert w.size == m and w.maximal
        built.add(m)
    assert built == oracle
    lo, hi = (comb(n, (n + 1) // 2) - ((n + 1) // 2) ** 2, comb(n, (n + 1) // 2))
    for m in range(max(lo, 1), hi + 1):
        assert theorem1_member(n, m) == (m in oracle)


@pytest.mark.parametrize("n", [6, 8, 10])
def test_complement_closure(n):
    for m in range(w_fn(n - 1) + 2, w_fn(n) + 1, 7):
        w = construct_mac(n, m)
        c = w.complement()
        assert c.size == m and c.maximal
        assert is_maximal_antichain(c.members(), n) == (True, True)
