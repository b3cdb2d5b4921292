"""Binomial cascades, minimum shadow sizes and related counting helpers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DomainError


@dataclass(frozen=True)
class Cascade:
    """t = sum of comb(a, i) over ``terms``, with a strictly decreasing."""

    k: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(comb(a, i) for a, i in self.terms)


def cascade(t: int, k: int) -> Cascade:
    """Greedy binomial representation of t at level k (zero terms dropped)."""
    if t < 1 or k < 1:
        raise DomainError("cascade needs t >= 1 and k >= 1")
    terms = []
    rest = t
    for i in range(k, 0, -1):
        if rest == 0:
            break
        a = i
        while comb(a + 1, i) <= rest:
            a += 1
        terms.append((a, i))
        rest -= comb(a, i)
    if rest:
        raise AssertionError(f"cascade of {t} at level {k} left {rest}")
    return Cascade(k, tuple(terms))


def kk_min_shadow(t: int, k: int) -> int:
    """Smallest possible shadow of t k-sets."""
    if k < 1 or t < 0:
        raise DomainError("need k >= 1 and t >= 0")
    if t == 0:
        return 0
    return sum(comb(a, i - 1) for a, i in cascade(t, k).terms)


def _falling_binom(x: float, k: int) -> float:
    v = 1.0
    for j in range(k):
        v *= (x - j) / (j + 1)
    return v


def lovasz_bound(t: int, k: int) -> float:
    """comb(x, k-1) where x >= k solves comb(x, k) = t (real binomials)."""
    if t < 1 or k < 1:
        raise DomainError("need t >= 1 and k >= 1")
    a = k
    while comb(a, k) < t:
        a += 1
    if comb(a, k) == t:
        return float(comb(a, k - 1))
    lo, hi = float(a - 1), float(a)
    while hi - lo > 1e-12 * hi:
        mid = (lo + hi) / 2
        if _falling_binom(mid, k) < t:
            lo = mid
        else:
            hi = mid
    return _falling_binom(lo, k - 1)


@lru_cache(maxsize=None)
def catalan_prefix(l: int) -> int:
    """Sum of the first l Catalan numbers (C_1 + ... + C_l)."""
    if l < 0:
        raise DomainError("l must be non-negative")
    return sum(comb(2 * i, i) // (i + 1) for i in range(1, l + 1))


def min_squashed_flat_size(n: int, k: int) -> tuple[int, int, list[int]]:
    """Minimum size of a maximal squashed flat antichain on levels k, k-1 of B_n.

    Returns ``(size, max_ksets, a_seq)`` where ``a_seq[i-2]`` is a_i for
    i = 2..k and max_ksets = sum comb(a_i, i).
    """
    if not 1 < k < n:
        raise DomainError("need 1 < k < n")
    size = min(comb(n, k - 1), comb(n, k)) - catalan_prefix(min(k - 1, n - k))
    a_seq = [2 * i - 2 if i <= n - k + 1 else n - k - 1 + i for i in range(2, k + 1)]
    max_ksets = sum(comb(a, i) for i, a in zip(range(2, k + 1), a_seq))
    return size, max_ksets, a_seq
