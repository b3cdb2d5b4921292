"""Shadow spectra of small uniform families and the witnesses behind them.

sigma(t, k) is the set of shadow sizes |ΔF| over families F of t k-sets.
For t <= k+1 it is tk minus the set I(t) of numbers C(a,2) + C(b,2) + c with
a >= b >= c >= 0 and 1 <= a + b <= t. The witnesses are complements of the
edges of two overlapping stars inside [k+2], padded by shadow-disjoint sets.
"""

from __future__ import annotations

import enum
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable

import numpy as np

from .errors import BudgetExceeded, DomainError, NotAchievable
from .intspec import IntSpectrum
from .kk import kk_min_shadow
from .setfam import (
    DEFAULT_BUDGET,
    UniformFamily,
    elset,
    level,
    shadow_set,
    split_ranges,
    subsets_removing_one,
)

log = logging.getLogger(__name__)


# the sets I(t) ---------------------------------------------------------------


def jstar(t: int) -> int:
    """Smallest j >= 0 with C(j+3, 2) >= t."""
    if t < 1:
        raise DomainError("jstar needs t >= 1")
    j = max(0, math.isqrt(2 * t) - 3)
    while comb(j + 3, 2) < t:
        j += 1
    while j > 0 and comb(j + 2, 2) >= t:
        j -= 1
    closed = max(0, math.ceil(math.sqrt(2 * t) - 2.5))
    assert j == closed, (t, j, closed)
    return j


def f_cap(t: int) -> int:
    """Right end of the widest interval of I(t)."""
    j = jstar(t)
    return comb(t - j, 2) + comb(j + 1, 2)


def interval_I(j: int, t: int) -> tuple[int, int]:
    if j == jstar(t):
        return 0, f_cap(t)
    return comb(t - j, 2), comb(t - j, 2) + comb(j + 1, 2)


def set_I(t: int) -> IntSpectrum:
    """I(t) as the union of the intervals I_j(t), j = 0..j*(t)."""
    if t < 1:
        raise DomainError("set_I needs t >= 1")
    return IntSpectrum(tuple(interval_I(j, t) for j in range(jstar(t) + 1)))


def set_I_bruteforce(t: int) -> IntSpectrum:
    """I(t) straight from its defining triples."""
    vals = set()
    for a in range(1, t + 1):
        for b in range(0, min(a, t - a) + 1):
            for c in range(b + 1):
                vals.add(comb(a, 2) + comb(b, 2) + c)
    return IntSpectrum.of(vals)


@lru_cache(maxsize=8192)
def sigma(t: int, k: int) -> IntSpectrum:
    """Exact shadow spectrum for t <= k+1."""
    if k < 2:
        raise DomainError("sigma needs k >= 2")
    if t == 0:
        return IntSpectrum.of([0])
    if not 1 <= t <= k + 1:
        raise DomainError(f"t={t} outside [1, k+1={k + 1}]; use sigma_bruteforce")
    return set_I(t).reflect(t * k)


# brute force -----------------------------------------------------------------


@lru_cache(maxsize=16)
def _shadow_words(k: int, g: int) -> np.ndarray:
    sets = level(g, k)
    index = {s: i for i, s in enumerate(level(g, k - 1))}
    words = (len(index) + 63) // 64
    out = np.zeros((len(sets), words), dtype=np.uint64)
    for r, s in enumerate(sets):
        for sub in subsets_removing_one(s):
            i = index[sub]
            out[r, i // 64] |= np.uint64(1) << np.uint64(i % 64)
    return out


@lru_cache(maxsize=16)
def _pair_table(k: int, g: int) -> tuple[np.ndarray, np.ndarray]:
    masks = _shadow_words(k, g)
    N = len(masks)
    i, j = np.triu_indices(N, 1)
    pairs = masks[i] | masks[j]
    offset = np.searchsorted(i, np.arange(N + 1))
    return pairs, offset


def _sizes(block: np.ndarray) -> np.ndarray:
    return np.bitwise_count(block).sum(axis=1, dtype=np.int64)


def _shard_sizes(k: int, g: int, t: int, start: int, stop: int) -> list[int]:
    """Shadow sizes of t-families whose first member index lies in [start, stop)."""
    masks = _shadow_words(k, g)
    N = len(masks)
    seen = np.zeros(t * k + 1, dtype=bool)
    if t == 1:
        if start < stop:
            seen[k] = True
    elif t == 2:
        pairs, offset = _pair_table(k, g)
        block = pairs[offset[start] : offset[stop]]
        if len(block):
            seen[_sizes(block)] = True
    else:
        pairs, offset = _pair_table(k, g)
        for first in range(start, stop):
            for rest in combinations(range(first + 1, N), t - 3):
                cur = masks[first].copy()
                for r in rest:
                    cur |= masks[r]
                last = rest[-1] if rest else first
                block = pairs[offset[last + 1] :]
                if len(block):
                    seen[_sizes(block | cur)] = True
    return np.flatnonzero(seen).tolist()


def sigma_bruteforce(
    t: int,
    k: int,
    ground: int | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> IntSpectrum:
    """Every shadow size of a t-family of k-subsets of [ground], by exhaustion."""
    if k < 1 or t < 0:
        raise DomainError("need k >= 1 and t >= 0")
    g = k + 4 if ground is None else ground
    N = comb(g, k)
    required = comb(N, t)
    if required > budget:
        raise BudgetExceeded(required, budget)
    if t == 0:
        return IntSpectrum.of([0])
    if t > N:
        return IntSpectrum()
    shards = split_ranges(N, t, max(jobs, 1) * 4 if jobs > 1 else 1)
    found: set[int] = set()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_shard_sizes, k, g, t, r.start, r.stop) for r in shards]
            for done, fut in enumerate(futures, 1):
                found.update(fut.result())
                if progress:
                    progress(done, len(shards))
    else:
        for done, r in enumerate(shards, 1):
            found.update(_shard_sizes(k, g, t, r.start, r.stop))
            if progress:
                progress(done, len(shards))
    return IntSpectrum.of(found)


# star and glued witnesses ------------------------------------------------------


@dataclass(frozen=True)
class StarSpec:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (self.a >= self.b >= self.c >= 0 and self.a >= 1):
            raise DomainError(f"need a >= b >= c >= 0 and a >= 1, got {self}")

    @property
    def adjacent_pairs(self) -> int:
        return comb(self.a, 2) + comb(self.b, 2) + self.c

    @property
    def vertices(self) -> int:
        return self.a + 1 if self.b == 0 else self.a + self.b - self.c + 2


@dataclass(frozen=True)
class GluedSpec:
    first: StarSpec
    second: StarSpec

    def __post_init__(self):
        a, b, c = self.first.a, self.first.b, self.first.c
        b2 = self.second.b
        ok = (a + b - 2 * c >= 2) or (b2 == 0 and a + b - 2 * c >= 1) or (b == 1 and a - 2 * c >= 0)
        if not ok:
            raise DomainError(f"{self.first} has too few pendant vertices for gluing")

    @property
    def adjacent_pairs(self) -> int:
        s = self.second
        return self.first.adjacent_pairs + s.adjacent_pairs + s.a + s.b

    @property
    def edges(self) -> int:
        return self.first.a + self.first.b + self.second.a + self.second.b


def star_graph(spec: StarSpec) -> list[tuple[int, int]]:
    """Edges of an a-star and a b-star sharing c leaves, on vertices 1..vertices."""
    a, b, c = spec.a, spec.b, spec.c
    if b == 0:
        return [(1, v) for v in range(2, a + 2)]
    shared = list(range(3, 3 + c))
    only_a = list(range(3 + c, 3 + a))
    only_b = list(range(3 + a, 3 + a + b - c))
    return [(1, v) for v in shared + only_a] + [(2, v) for v in shared + only_b]


def glued_graph(spec: GluedSpec) -> list[tuple[int, int]]:
    """Star graph of ``spec.first`` with the centres of ``spec.second`` placed on its leaves."""
    base = star_graph(spec.first)
    degree: dict[int, int] = {}
    for u, v in base:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    leaves = sorted(v for v, d in degree.items() if d == 1)
    edge_set = {frozenset(e) for e in base}
    extra = star_graph(spec.second)
    centres = 1 if spec.second.b == 0 else 2
    if centres == 1:
        chosen = leaves[-1:]
    else:
        # adjacent leaves together with a shared leaf of the second graph would close a triangle
        chosen = next(
            ([p, q] for p, q in combinations(reversed(leaves), 2) if frozenset((p, q)) not in edge_set),
            [],
        )
    if len(chosen) < centres:
        raise DomainError(f"{spec.first} has too few usable leaves")
    top = max(degree)
    relabel = {i + 1: chosen[i] for i in range(centres)}
    for v in sorted({x for e in extra for x in e} - set(relabel)):
        top += 1
        relabel[v] = top
    return base + [(relabel[u], relabel[v]) for u, v in extra]


def _graph_family(edges: list[tuple[int, int]], k: int, n: int) -> UniformFamily:
    top = max(max(e) for e in edges)
    if top > k + 2:
        raise DomainError(f"graph needs {top} vertices, only {k + 2} available for k={k}")
    full = (1 << (k + 2)) - 1
    return UniformFamily(n, k, tuple(full & ~elset(e) for e in edges))


def star_family(spec: StarSpec, k: int, n: int | None = None) -> UniformFamily:
    """Complements in [k+2] of the edges of the star graph of ``spec``."""
    if spec.b == 0 and k < spec.a - 1 or spec.b >= 1 and k < spec.a + spec.b - spec.c:
        raise DomainError(f"{spec} does not fit in [{k + 2}]")
    F = _graph_family(star_graph(spec), k, k + 2 if n is None else n)
    expected = (spec.a + spec.b) * k - spec.adjacent_pairs
    if len(F) != spec.a + spec.b or len(shadow_set(F.members)) != expected:
        raise AssertionError(f"star family {spec} at k={k} breaks its size formula")
    return F


def glued_family(spec: GluedSpec, k: int, n: int | None = None) -> UniformFamily:
    """Complements in [k+2] of the edges of the glued graph of ``spec``."""
    f, s = spec.first, spec.second
    if f.b == 0:
        need = f.a + s.a + s.b - s.c - 1
    else:
        need = f.a + f.b - f.c + s.a + s.b - s.c
    if k < need:
        raise DomainError(f"{spec} needs k >= {need}")
    F = _graph_family(glued_graph(spec), k, k + 2 if n is None else n)
    expected = spec.edges * k - spec.adjacent_pairs
    if len(F) != spec.edges or len(shadow_set(F.members)) != expected:
        raise AssertionError(f"glued family {spec} at k={k} breaks its size formula")
    return F


def decompose(x: int, t: int) -> StarSpec:
    """First (a, b, c) with C(a,2)+C(b,2)+c = x, a+b <= t, scanning a, b, c downward."""
    for a in range(t, 0, -1):
        for b in range(min(a, t - a), -1, -1):
            c = x - comb(a, 2) - comb(b, 2)
            if 0 <= c <= b:
                return StarSpec(a, b, c)
    raise NotAchievable(f"{x} is not in I({t})", {"x": x, "t": t})


def pad_shadow_disjoint(F: UniformFamily, count: int) -> UniformFamily:
    """Add ``count`` sets, each contributing k new shadow elements (first fit in squashed order)."""
    members = list(F.members)
    shade = shadow_set(members)
    for A in level(F.n, F.k):
        if count == 0:
            break
        sub = set(subsets_removing_one(A))
        if A not in members and not (sub & shade):
            members.append(A)
            shade |= sub
            count -= 1
    if count:
        raise NotAchievable(f"no room for {count} more shadow-disjoint {F.k}-sets in [{F.n}]")
    return UniformFamily(F.n, F.k, tuple(members))


def witness_family(s: int, t: int, k: int) -> UniformFamily:
    """A family of t k-subsets of [k+4] whose shadow has exactly s elements."""
    spec_set = sigma(t, k)
    if s not in spec_set:
        raise NotAchievable(
            f"{s} is not a shadow size of {t} {k}-sets",
            {"reason": "not in sigma", "s": s, "t": t, "k": k, "sigma": [list(r) for r in spec_set.runs]},
        )
    n = k + 4
    if t == 0:
        return UniformFamily(n, k)
    star = decompose(t * k - s, t)
    if star.c == 0 and star.b >= 1:
        star = StarSpec(star.a, star.b - 1, star.b - 1)
    F = star_family(star, k, n)
    F = pad_shadow_disjoint(F, t - len(F))
    if len(F) != t or len(shadow_set(F.members)) != s:
        raise AssertionError(f"witness for s={s}, t={t}, k={k} failed verification")
    return F


# Sigma(k) and psi(k) -----------------------------------------------------------


def _spectrum_runs(k: int, cap: int) -> tuple[np.ndarray, np.ndarray]:
    los, his = [], []
    for t in range(1, k + 2):
        js = jstar(t)
        j = np.arange(js, dtype=np.int64)
        base = (t - j) * (t - j - 1) // 2
        top = t * k
        los.append(top - base - j * (j + 1) // 2)
        his.append(top - base)
        los.append(np.array([top - f_cap(t)], dtype=np.int64))
        his.append(np.array([top], dtype=np.int64))
    lo = np.concatenate(los)
    hi = np.minimum(np.concatenate(his), cap)
    keep = lo <= hi
    return lo[keep], hi[keep]


def _merge_numpy(lo: np.ndarray, hi: np.ndarray) -> list[tuple[int, int]]:
    order = np.argsort(lo, kind="stable")
    lo, hi = lo[order], hi[order]
    reach = np.maximum.accumulate(hi)
    starts = np.ones(len(lo), dtype=bool)
    starts[1:] = lo[1:] > reach[:-1] + 1
    idx = np.flatnonzero(starts)
    ends = np.append(idx[1:] - 1, len(lo) - 1)
    return list(zip(lo[idx].tolist(), reach[ends].tolist()))


def big_sigma(k: int, cap: int) -> IntSpectrum:
    """All positive shadow sizes of k-uniform families, up to ``cap``.

    Sizes at or above k^2 are always achievable, and families with more than
    k+1 members never produce a size below k^2, so t <= k+1 suffices.
    """
    if k < 3:
        raise DomainError("big_sigma needs k >= 3")
    if cap < k * k:
        raise DomainError("cap must be at least k^2")
    lo, hi = _spectrum_runs(k, cap)
    runs = _merge_numpy(np.append(lo, k * k), np.append(hi, cap))
    return IntSpectrum(tuple(runs))


@dataclass(frozen=True)
class PsiReport:
    k: int
    psi: int
    t_star: int
    sigma_union: IntSpectrum
    formula: int

    @property
    def formula_agrees(self) -> bool:
        return self.formula == self.psi


FORMULA_SAFE_K = 374


def t_star(k: int) -> int:
    """Largest t with f(t) <= k - 2."""
    t = 1
    while f_cap(t + 1) <= k - 2:
        t += 1
    return t


def psi(k: int) -> PsiReport:
    """Largest integer that is not the shadow size of any k-uniform family."""
    if k < 3:
        raise DomainError("psi needs k >= 3")
    union = big_sigma(k, k * k)
    missing = union.complement(0, k * k)
    value = missing.max
    ts = t_star(k)
    formula = ts * k - f_cap(ts) - 1
    if k >= FORMULA_SAFE_K:
        assert formula == value, (k, formula, value)
    elif formula != value:
        log.debug("closed form for psi(%d) gives %d, exact value %d", k, formula, value)
    return PsiReport(k, value, ts, union, formula)


def psi_asymptotic(k: int) -> float:
    return math.sqrt(2) * k**1.5 + 8**0.25 * k**1.25


def smallest_formula_k(limit: int = FORMULA_SAFE_K) -> int:
    """Smallest k such that the closed form for psi holds for every k' in [k, limit]."""
    k = limit
    while k > 3 and psi(k - 1).formula_agrees:
        k -= 1
    return k


# gap predicate for t beyond k+1 -------------------------------------------------


class Verdict(str, enum.Enum):
    GAP = "gap"
    MEMBER = "member"
    UNKNOWN = "unknown"


def _first_condition(s: int, t: int, k: int) -> bool:
    if t < 2:
        return False
    base = kk_min_shadow(t - 1, k)
    a = k + 1
    while comb(a, k - 1) <= base + k - 2:
        if base <= comb(a, k - 1) < s <= base + k - 2:
            return True
        a += 1
    return False


def _k3_gap(s: int, t: int) -> bool:
    a = 4
    while comb(a, 2) + 1 <= s:
        if s == comb(a, 2) + 1 and comb(a, 3) - a + 4 <= t <= comb(a, 3):
            return True
        a += 1
    return False


def _k4_gap(s: int, t: int) -> bool:
    a = 5
    while comb(a, 3) + 1 <= s:
        c3 = comb(a, 3)
        c4 = comb(a, 4)
        if s == c3 + 1 and c4 - 2 * a + 9 <= t <= c4 - a + 4:
            return True
        if s in (c3 + 1, c3 + 2) and c4 - a + 5 <= t <= c4:
            return True
        for b in range(4, a):
            if s == c3 + comb(b, 2) + 1 and c4 + comb(b, 3) - b + 4 <= t <= c4 + comb(b, 3):
                return True
        a += 1
    return False


def leck_gap_predicate(s: int, t: int, k: int) -> Verdict:
    """Certify s as a gap or a member of sigma(t, k) where known conditions allow."""
    if k < 2 or t < 1:
        raise DomainError("need k >= 2 and t >= 1")
    low = kk_min_shadow(t, k)
    if s < low or s > t * k:
        return Verdict.GAP
    if _first_condition(s, t, k):
        return Verdict.GAP
    if t <= k + 1:
        return Verdict.MEMBER if s in sigma(t, k) else Verdict.GAP
    if k == 3:
        return Verdict.GAP if _k3_gap(s, t) else Verdict.MEMBER
    if s in (low, t * k):
        return Verdict.MEMBER
    if k == 4 and _k4_gap(s, t):
        return Verdict.GAP
    return Verdict.UNKNOWN
