"""Sizes of maximal antichains in the Boolean lattice B_n, with explicit witnesses.

Every constructor returns a :class:`MacWitness` whose antichain property and
maximality were recomputed from the member sets (for n up to ``VERIFY_N``).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from . import fixtures
from .errors import BudgetExceeded, DomainError, NotAchievable
from .intspec import IntSpectrum
from .kk import catalan_prefix
from .setfam import (
    DEFAULT_BUDGET,
    UniformFamily,
    elset,
    ground_mask,
    is_maximal_antichain,
    level,
    shadow_set,
    shade_set,
    subsets_removing_one,
)
from .spectrum import (
    StarSpec,
    big_sigma,
    decompose,
    f_cap,
    jstar,
    pad_shadow_disjoint,
    psi,
    sigma,
    star_family,
    witness_family,
)

log = logging.getLogger(__name__)

VERIFY_N = 20
MAX_WITNESS_SETS = 3_000_000


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def middle(n: int) -> int:
    return (n + 1) // 2


# witnesses ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MacWitness:
    """An antichain in B_n split by level, with its size and maximality flag."""

    n: int
    parts: dict[int, UniformFamily] = field(default_factory=dict)
    size: int = 0
    maximal: bool = False
    origin: str = ""

    @classmethod
    def from_sets(cls, n: int, sets, origin: str = "", check: bool | None = None) -> "MacWitness":
        sets = sorted(set(sets))
        by_level: dict[int, list[int]] = {}
        for s in sets:
            by_level.setdefault(s.bit_count(), []).append(s)
        parts = {j: UniformFamily(n, j, tuple(v)) for j, v in sorted(by_level.items())}
        if check is None:
            check = n <= VERIFY_N
        if check:
            antichain, maximal = is_maximal_antichain(sets, n)
            if not antichain:
                raise AssertionError(f"{origin or 'family'} is not an antichain")
        else:
            maximal = True
            log.info("maximality of %s on n=%d taken from its construction", origin, n)
        return cls(n, parts, len(sets), maximal, origin)

    def members(self) -> list[int]:
        return sorted(s for F in self.parts.values() for s in F.members)

    def census(self) -> dict[int, int]:
        return {j: len(F) for j, F in self.parts.items()}

    def complement(self) -> "MacWitness":
        full = ground_mask(self.n)
        return MacWitness.from_sets(self.n, [full & ~s for s in self.members()], origin=f"complement of {self.origin}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "levels": {str(j): F.as_lists() for j, F in self.parts.items()},
            "size": self.size,
            "maximal": self.maximal,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, check: bool = True) -> "MacWitness":
        n = int(data["n"])
        sets = [elset(s) for rows in data["levels"].values() for s in rows]
        return cls.from_sets(n, sets, origin="file", check=check)


def _require_size(w: MacWitness, m: int) -> MacWitness:
    if w.size != m or not w.maximal:
        raise AssertionError(f"{w.origin}: expected a maximal antichain of size {m}, got size {w.size}, maximal={w.maximal}")
    return w


def _full_level_guard(n: int, j: int) -> None:
    if binom(n, j) > MAX_WITNESS_SETS:
        raise BudgetExceeded(binom(n, j), MAX_WITNESS_SETS)


def full_level(n: int, j: int) -> MacWitness:
    _full_level_guard(n, j)
    return MacWitness.from_sets(n, level(n, j), origin=f"level {j}")


def small_mac(n: int, m: int) -> MacWitness:
    """{1}, ..., {m-1} and the rest of [n] as one set; any 1 <= m <= n."""
    if not 1 <= m <= n:
        raise DomainError("need 1 <= m <= n")
    sets = [1 << (i - 1) for i in range(1, m)] + [ground_mask(n) & ~((1 << (m - 1)) - 1)]
    return MacWitness.from_sets(n, sets, origin="singletons")


def mac_from_family(F: UniformFamily, n: int | None = None, l: int | None = None) -> MacWitness:
    """F together with every (l-1)-set of [n] outside its shadow."""
    n = F.n if n is None else n
    l = F.k if l is None else l
    if F.members and F.k != l:
        raise DomainError(f"family is {F.k}-uniform, expected level {l}")
    if any(s >> n for s in F.members):
        raise DomainError(f"family does not fit in [{n}]")
    if l < 1:
        raise DomainError("level must be at least 1")
    _full_level_guard(n, l - 1)
    shade = shadow_set(F.members)
    sets = list(F.members) + [s for s in level(n, l - 1) if s not in shade]
    w = MacWitness.from_sets(n, sets, origin=f"family on level {l}", check=len(F) >= l or n <= VERIFY_N)
    if len(F) < l and not w.maximal:
        raise AssertionError("a family smaller than its level must give a maximal antichain")
    return w


# theorem-one range ---------------------------------------------------------------


def w_fn(n: int) -> int:
    """Threshold below which every size is known to occur."""
    if n < 1:
        raise DomainError("n must be positive")
    k = middle(n)
    return comb(n, k) - k * ((n + 2 + 3) // 4)


def _sigma_any(t: int, l: int) -> IntSpectrum:
    if t == 0:
        return IntSpectrum.of([0])
    if l <= 0:
        return IntSpectrum()
    if l == 1:
        return IntSpectrum.of([1])
    return sigma(t, l)


@lru_cache(maxsize=256)
def large_gap_union(n: int) -> IntSpectrum:
    """Union over t <= k of sigma(t,k) and sigma(t,n-k), k = ceil(n/2)."""
    k = middle(n)
    out = IntSpectrum()
    for t in range(0, k + 1):
        out = out | _sigma_any(t, k)
        if t <= n - k + 1:
            out = out | _sigma_any(t, n - k)
    return out


def theorem1_range(n: int) -> tuple[int, int]:
    k = middle(n)
    return max(1, comb(n, k) - k * k), comb(n, k)


def theorem1_member(n: int, m: int) -> bool:
    """Decide m in S(n) for sizes within k^2 of the largest level."""
    lo, hi = theorem1_range(n)
    if not lo <= m <= hi:
        raise DomainError(f"m={m} outside [{lo}, {hi}] for n={n}")
    return comb(n, middle(n)) - m in large_gap_union(n)


def _gap_options(n: int, gap: int):
    """(t, l) pairs with gap in sigma(t, l), l in {k, n-k}, smallest t first.

    t runs up to k+1: for n <= 9 some sizes need one set more than the
    membership test uses, with maximality then checked directly.
    """
    k = middle(n)
    out = []
    for t in range(0, k + 2):
        for l in sorted({k, n - k}, reverse=True):
            if t <= l + 1 and gap in _sigma_any(t, l):
                out.append((t, l))
    return out


def _search_family(n: int, L: int, t: int, target: int, node_budget: int = 2_000_000) -> UniformFamily | None:
    """Depth-first search for t L-subsets of [n] whose shadow has exactly ``target`` elements."""
    sets = level(n, L)
    shades = [frozenset(subsets_removing_one(s)) for s in sets]
    nodes = 0

    def dfs(start: int, chosen: list[int], shade: frozenset) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(nodes, node_budget)
        size = len(shade)
        left = t - len(chosen)
        if left == 0:
            return chosen if size == target else None
        if size > target or size + left * L < target:
            return None
        for i in range(start, len(sets) - left + 1):
            got = dfs(i + 1, chosen + [sets[i]], shade | shades[i])
            if got:
                return got
        return None

    if t == 0:
        return UniformFamily(n, L) if target == 0 else None
    found = dfs(0, [], frozenset())
    return UniformFamily(n, L, tuple(found)) if found else None


def _graph_family(n: int, L: int, edges) -> UniformFamily | None:
    top = max(max(e) for e in edges)
    if top > L + 2 or L + 2 > n:
        return None
    full = ground_mask(L + 2)
    return UniformFamily(n, L, tuple(full & ~elset(e) for e in edges))


@lru_cache(maxsize=4096)
def find_family(n: int, L: int, t: int, target: int) -> tuple[UniformFamily, str] | None:
    """A family of t L-subsets of [n] with shadow size ``target``, and how it was found.

    None when every route fails, including a search that runs out of budget.
    """
    if t == 0:
        return (UniformFamily(n, L), "empty") if target == 0 else None
    if L < 2 or t > L + 1 or target not in sigma(t, L):
        return None
    c = t * L - target
    edges = fixtures.EDGE_SETS.get((t, c))
    if edges and n <= 9:
        F = _graph_family(n, L, edges)
        if F is not None and len(shadow_set(F.members)) == target:
            return F, f"edge set E{t}{c}"
    if n >= L + 4:
        F = witness_family(target, t, L)
        return UniformFamily(n, L, F.members), "spectrum witness"
    star = decompose(t * L - target, t)
    if star.c == 0 and star.b >= 1:
        star = StarSpec(star.a, star.b - 1, star.b - 1)
    if star.vertices <= L + 2 <= n:
        try:
            F = pad_shadow_disjoint(star_family(star, L, n), t - star.a - star.b)
            if len(shadow_set(F.members)) == target:
                return F, "star family"
        except NotAchievable:
            pass
    try:
        F = _search_family(n, L, t, target)
    except BudgetExceeded:
        log.debug("family search over budget: n=%d L=%d t=%d target=%d", n, L, t, target)
        return None
    if F is not None:
        return F, "search"
    return None


def construct_large_mac(n: int, m: int) -> MacWitness:
    """A maximal antichain of size m for m within k^2 of the largest level."""
    lo, hi = theorem1_range(n)
    if not lo <= m <= hi:
        raise DomainError(f"m={m} outside [{lo}, {hi}] for n={n}")
    k = middle(n)
    gap = comb(n, k) - m
    if not theorem1_member(n, m):
        raise NotAchievable(
            f"{m} is not the size of a maximal antichain in B_{n}",
            {"reason": "certified non-size", "n": n, "m": m, "gap": gap},
        )
    if gap == 0:
        return _require_size(full_level(n, k), m)
    if m <= n:
        return _require_size(small_mac(n, m), m)
    if n == 5 and m in fixtures.N5_UPPER:
        L, upper = fixtures.N5_UPPER[m]
        F = UniformFamily.from_sets(n, L, upper)
        return _require_size(_relabel(mac_from_family(F, n, L), "listed antichain"), m)
    if n == 10 and m == w_fn(10):
        F = UniformFamily.from_sets(n, 6, fixtures.N10_W)
        return _require_size(_relabel(mac_from_family(F, n, 6), "listed antichain"), m)
    for t, l in _gap_options(n, gap):
        found = find_family(n, l + 1, t, gap + t)
        if found is None:
            continue
        F, how = found
        w = mac_from_family(F, n, l + 1)
        if w.maximal and w.size == m:
            return _relabel(w, f"levels {l + 1}/{l}, {how}")
    raise NotAchievable(f"no construction found for m={m}, n={n}", {"reason": "construction failed", "n": n, "m": m})


def _relabel(w: MacWitness, origin: str) -> MacWitness:
    return MacWitness(w.n, w.parts, w.size, w.maximal, origin)


def n9_table_witnesses() -> dict[int, MacWitness]:
    """One verified witness per size listed for n = 9, built from the edge-set table."""
    out: dict[int, MacWitness] = {}
    for (upper, lower), table in fixtures.N9_TABLE.items():
        for (t, c), size in table.items():
            if size in out:
                continue
            target = t * upper - c
            found = find_family(9, upper, t, target)
            if found is None:
                raise AssertionError(f"no family for E{t}{c} on levels {upper}/{lower}")
            F, how = found
            w = mac_from_family(F, 9, upper)
            if w.size != size or not w.maximal:
                continue
            out[size] = _relabel(w, f"E{t}{c} on levels {upper}/{lower} ({how})")
    return dict(sorted(out.items()))


# squashed flat antichains -------------------------------------------------------


@dataclass(frozen=True)
class YTable:
    """Sizes of maximal squashed flat antichains containing every k-subset of [k+3]."""

    n: int
    k: int
    entries: tuple[tuple[int, int], ...]  # (number of k-sets, size), by number of k-sets

    @property
    def sizes(self) -> IntSpectrum:
        return IntSpectrum.of(s for _, s in self.entries)

    @property
    def min(self) -> int:
        return min(s for _, s in self.entries)

    @property
    def max(self) -> int:
        return max(s for _, s in self.entries)

    def ksets_for(self, size: int) -> list[int]:
        return [p for p, s in self.entries if s == size]


def squashed_new_shadow(bits: int) -> int:
    """New shadow of a k-set added after all its predecessors in squashed order."""
    r = 0
    while bits >> r & 1:
        r += 1
    return r


@lru_cache(maxsize=64)
def enumerate_Y(n: int, k: int) -> YTable:
    if not (n // 2 <= k <= n - 3 and k >= 2):
        raise DomainError(f"need floor(n/2) <= k <= n-3, got n={n}, k={k}")
    sets = level(n, k)
    total = len(sets)
    shade = 0
    start = comb(k + 3, k)
    entries = []
    for p, A in enumerate(sets, start=1):
        shade += squashed_new_shadow(A)
        if p < start:
            continue
        if p == total or sets[p] & 1:
            entries.append((p, p + comb(n, k - 1) - shade))
    return YTable(n, k, tuple(entries))


def squashed_mac(n: int, k: int, p: int) -> MacWitness:
    F = UniformFamily(n, k, tuple(level(n, k)[:p]))
    return mac_from_family(F, n, k)


def interval_Ink(n: int, k: int) -> tuple[int, int]:
    """Sizes reached by modifying maximal squashed flat antichains on levels k, k-1."""
    if n < 7 or not n // 2 <= k <= n - 3:
        raise DomainError(f"need n >= 7 and floor(n/2) <= k <= n-3, got n={n}, k={k}")
    Y = enumerate_Y(n, k)
    t = (k + 3) // 2
    return Y.min - t * k, Y.max - t * k + f_cap(t)


def interval_Ink_closed(n: int, k: int) -> tuple[int, int]:
    """Closed-form endpoints for 5 <= k <= n-4 and (n-1)/2 <= k."""
    if not (k >= 5 and 2 * k >= n - 1 and k <= n - 4):
        raise DomainError("closed form needs 5 <= k <= n-4 and 2k >= n-1")
    t = (k + 3) // 2
    L = f_cap(t)
    if 2 * k > n + 1:
        return comb(n, k) - catalan_prefix(n - k) - t * k, comb(n, k - 1) + comb(k + 3, k) - comb(k + 3, k - 1) - t * k + L
    return comb(n, k - 1) - catalan_prefix(k - 1) - t * k, comb(n, k) - t * k + L


# modifying a squashed antichain ----------------------------------------------------


def _three_level(n: int, k: int, p: int, F: UniformFamily) -> MacWitness:
    inner = k + 3
    base = level(n, k)[:p]
    inner_k = set(level(inner, k))
    shade = shadow_set(base)
    lower = [s for s in level(n, k - 1) if s not in shade]
    F_shade = shadow_set(F.members)
    kept = [s for s in base if s not in inner_k] + [s for s in inner_k if s not in F_shade]
    return MacWitness.from_sets(n, list(F.members) + kept + lower, origin=f"squashed prefix {p} on levels {k}/{k - 1} with {len(F)} sets on level {k + 1}")


def construct_mid_mac(n: int, m: int, ks: list[int] | None = None) -> MacWitness:
    """Replace the k-subsets of [k+3] in a maximal squashed flat antichain by a small three-level piece."""
    if n < 7:
        raise DomainError("needs n >= 7")
    ks = ks or [k for k in range(n // 2, n - 2) if 2 * k >= n - 1]
    for k in ks:
        Y = enumerate_Y(n, k)
        t_pref = (k + 3) // 2
        order = [t_pref] + [t for t in range(1, k + 1) if t != t_pref]
        for p, size in sorted(Y.entries, key=lambda e: (e[1] - m, e[0])):
            s = size - m
            if s < 0:
                continue
            for t in order:
                if s not in sigma(t, k):
                    continue
                if p == comb(n, k) and n >= k + 5:
                    F = witness_family(s + t, t, k + 1)
                    w = mac_from_family(UniformFamily(n, k + 1, F.members), n, k + 1)
                    if w.maximal and w.size == m:
                        return _relabel(w, f"full level {k} with {t} sets on level {k + 1}")
                found = find_family(k + 3, k + 1, t, s + t)
                if found is None:
                    continue
                F, _ = found
                w = _three_level(n, k, p, UniformFamily(n, k + 1, F.members))
                if w.maximal and w.size == m:
                    return w
    raise NotAchievable(f"no squashed modification reaches {m} in B_{n}", {"reason": "construction failed", "n": n, "m": m})


# separated antichains and lifts -----------------------------------------------------


@lru_cache(maxsize=None)
def separated_window(n: int, k: int) -> tuple[int, int]:
    """Sizes of maximal {1,2}-separated antichains built by the recursion below.

    Every size in the returned closed interval is produced by ``separated_antichain``.
    On [k+1] only k and k+1 are possible: in complement form the k-sets are points,
    the (k-1)-sets are pairs meeting {1,2}, and maximality forces every pair outside
    the chosen points to be present.
    """
    if k < 2 or n < k + 1:
        raise DomainError("need k >= 2 and n >= k+1")
    if k == 2:
        return n - 1, n
    if n == k + 1:
        return k, k + 1
    lo1, hi1 = separated_window(n - 1, k)
    lo2, hi2 = separated_window(n - 1, k - 1)
    return lo1 + lo2, hi1 + hi2


def _separated_sets(n: int, k: int, m: int) -> list[int]:
    lo, hi = separated_window(n, k)
    if not lo <= m <= hi:
        raise DomainError(f"m={m} outside [{lo}, {hi}] for n={n}, k={k}")
    full = ground_mask(n)
    if k == 2:
        singles = [1 << i for i in range(n)]
        return singles if m == n else [0b11] + singles[2:]
    if n == k + 1:
        if m == k:
            return [full & ~(1 << j) for j in range(2, n)] + [full & ~0b11]
        top = 1 << (n - 1)
        return [full & ~(1 << j) for j in range(2, n - 1)] + [full & ~0b11, full & ~(0b01 | top), full & ~(0b10 | top)]
    lo1, hi1 = separated_window(n - 1, k)
    lo2, _ = separated_window(n - 1, k - 1)
    m1 = min(hi1, m - lo2)
    top = 1 << (n - 1)
    return _separated_sets(n - 1, k, m1) + [s | top for s in _separated_sets(n - 1, k - 1, m - m1)]


def is_separated(w: MacWitness, k: int) -> bool:
    for s in w.members():
        c = s.bit_count()
        if c == k and s & 0b11 != 0b11:
            return False
        if c == k - 1 and s & 0b11 == 0b11:
            return False
        if c not in (k, k - 1):
            return False
    return True


def separated_claimed_window(n: int, k: int) -> tuple[int, int]:
    """Wider window in which separated antichains were claimed to exist for every size."""
    return binom(n - 1, k - 1), binom(n, k - 1) - 2 * binom(n - 3, k - 3) - binom(n - 4, k - 5)


def separated_antichain(n: int, k: int, m: int) -> MacWitness:
    """A maximal antichain on levels k, k-1 whose k-sets contain {1,2} and whose (k-1)-sets do not."""
    if k < 2 or n < k + 1:
        raise DomainError("need k >= 2 and n >= k+1")
    c_lo, c_hi = separated_claimed_window(n, k)
    if not c_lo <= m <= c_hi:
        raise DomainError(f"m={m} outside [{c_lo}, {c_hi}] for n={n}, k={k}")
    lo, hi = separated_window(n, k)
    if not lo <= m <= hi:
        raise NotAchievable(
            f"no maximal separated antichain of size {m} from the recursion for n={n}, k={k}",
            {"reason": "construction failed", "n": n, "k": k, "m": m, "reachable": [lo, hi]},
        )
    w = MacWitness.from_sets(n, _separated_sets(n, k, m), origin=f"separated on levels {k}/{k - 1}")
    return _require_size(w, m)


def lift_antichain(A: MacWitness, mode: str, k: int | None = None) -> MacWitness:
    """Turn a maximal antichain of B_{n-1} into one of B_n."""
    n = A.n + 1
    top = 1 << (n - 1)
    levels = sorted(A.parts)
    if mode == "pad_low":
        k = levels[-1] if k is None else k
        if not set(levels) <= {k - 1, k}:
            raise DomainError(f"pad_low needs levels {k - 1}/{k}, got {levels}")
        sets = A.members() + [s | top for s in level(n - 1, k - 2)]
    elif mode == "shift_up":
        k = levels[-1] + 1 if k is None else k
        if not set(levels) <= {k - 2, k - 1}:
            raise DomainError(f"shift_up needs levels {k - 2}/{k - 1}, got {levels}")
        sets = [s | top for s in A.members()] + level(n - 1, k)
    elif mode == "add_pairs":
        floor = binom(n - 2, (n - 2) // 2) + 1
        if A.size <= floor:
            raise DomainError(f"add_pairs needs more than {floor} sets")
        sets = A.members() + [(1 << i) | top for i in range(n - 1)]
    elif mode == "add_singleton":
        if 0 in A.members():
            raise DomainError("cannot add a singleton next to the empty set")
        sets = A.members() + [top]
    else:
        raise DomainError(f"unknown lift mode {mode!r}")
    w = MacWitness.from_sets(n, sets, origin=f"{mode} of {A.origin}")
    if not w.maximal:
        raise AssertionError(f"{mode} lift lost maximality")
    return w


def _n6_fixture(m: int) -> MacWitness:
    if m in fixtures.N6_FULL:
        sets = [elset(s) for s in fixtures.N6_FULL[m]]
    else:
        G = [elset(e) for e in fixtures.N6_GRAPHS[m]]
        up = shade_set(G, 6)
        sets = G + [s for s in level(6, 3) if s not in up]
    return _require_size(MacWitness.from_sets(6, sets, origin=f"listed antichain n=6 m={m}"), m)


def bridge_antichain(n: int, k: int, m: int) -> MacWitness:
    """Any m in [C(n-1,k-1), C(n,k-1)] on levels k, k-1, for 3 <= k and 2k <= n."""
    lo, hi = binom(n - 1, k - 1), binom(n, k - 1)
    if k < 3 or n < 2 * k or not lo <= m <= hi:
        raise DomainError(f"bridge needs k >= 3, n >= 2k and m in [{lo}, {hi}]")
    if (n, k) == (6, 3):
        if m == hi:
            return full_level(6, 2)
        return _n6_fixture(m)
    if m == hi:
        return _relabel(full_level(n, k - 1), "level")
    if n >= 2 * k + 1:
        pad = binom(n - 1, k - 2)
        if m - pad >= binom(n - 2, k - 1):
            return _require_size(lift_antichain(bridge_antichain(n - 1, k, m - pad), "pad_low", k), m)
        return separated_antichain(n, k, m)
    # n == 2k
    s_lo, s_hi = separated_window(n, k)
    if s_lo <= m <= s_hi:
        return separated_antichain(n, k, m)
    pad = binom(2 * k - 1, k - 2)
    s_lo, s_hi = separated_window(2 * k - 1, k)
    if s_lo <= m - pad <= s_hi:
        return _require_size(lift_antichain(separated_antichain(2 * k - 1, k, m - pad), "pad_low", k), m)
    shift = binom(2 * k - 2, k)
    b_lo, b_hi = binom(2 * k - 3, k - 2), binom(2 * k - 2, k - 2)
    if b_lo <= m - shift - pad <= b_hi:
        inner = bridge_antichain(2 * k - 2, k - 1, m - shift - pad)
        return _require_size(lift_antichain(lift_antichain(inner, "shift_up", k), "pad_low", k), m)
    shift = binom(2 * k - 1, k)
    b_lo, b_hi = binom(2 * k - 2, k - 2), binom(2 * k - 1, k - 2)
    if b_lo <= m - shift <= b_hi:
        return _require_size(lift_antichain(bridge_antichain(2 * k - 1, k - 1, m - shift), "shift_up", k), m)
    raise NotAchievable(f"bridge ingredients miss m={m} for n={n}, k={k}", {"reason": "construction failed"})


# flat antichains from squashed prefixes, separated pieces and lifts ---------------------


@lru_cache(maxsize=None)
def _squashed_flat_sizes(n: int, k: int) -> dict[int, int]:
    """size -> squashed prefix length, over every maximal squashed flat antichain."""
    sets = level(n, k)
    shade = 0
    out: dict[int, int] = {}
    for p, A in enumerate(sets, start=1):
        shade += squashed_new_shadow(A)
        if p == len(sets) or sets[p] & 1:
            out.setdefault(p + comb(n, k - 1) - shade, p)
    return out


def pinned_pair_antichain(n: int, k: int, p: int) -> MacWitness:
    """{1,2} joined to the first p squashed (k-2)-sets of {3..n}, plus every (k-1)-set outside their shadow.

    Always maximal: a k-set with its whole shadow covered must contain {1,2}
    and have its remaining k-2 elements among the chosen ones.
    """
    if k < 3 or n < k + 1:
        raise DomainError("need k >= 3 and n >= k+1")
    F = [(s << 2) | 0b11 for s in level(n - 2, k - 2)[:p]]
    if len(F) != p:
        raise DomainError(f"p={p} exceeds comb({n - 2}, {k - 2})")
    shade = shadow_set(F)
    lower = [s for s in level(n, k - 1) if s not in shade]
    return MacWitness.from_sets(n, F + lower, origin=f"pinned pair with {p} sets on levels {k}/{k - 1}")


@lru_cache(maxsize=None)
def _pinned_pair_sizes(n: int, k: int) -> dict[int, int]:
    """size -> p for pinned_pair_antichain."""
    out: dict[int, int] = {}
    used = 0
    for p, A in enumerate(level(n - 2, k - 2), start=1):
        used += 1 + squashed_new_shadow(A)
        out.setdefault(comb(n, k - 1) - used, p)
    return out


@lru_cache(maxsize=None)
def flat_recipes(n: int, k: int) -> dict[int, tuple]:
    """Sizes of maximal flat antichains on levels k, k-1 of B_n that flat_antichain can build.

    Each value is a recipe: ("level", j), ("squashed", p), ("pinned", p), ("separated",),
    ("pad_low", inner size) or ("shift_up", inner size).
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    out: dict[int, tuple] = {comb(n, k): ("level", k)}
    if k == 1:
        return out
    out.setdefault(comb(n, k - 1), ("level", k - 1))
    for size, p in _squashed_flat_sizes(n, k).items():
        out.setdefault(size, ("squashed", p))
    if n >= k + 1 and k >= 3:
        for size, p in _pinned_pair_sizes(n, k).items():
            out.setdefault(size, ("pinned", p))
    if n >= k + 1:
        lo, hi = separated_window(n, k)
        for size in range(lo, hi + 1):
            out.setdefault(size, ("separated",))
        for size in flat_recipes(n - 1, k):
            out.setdefault(size + comb(n - 1, k - 2), ("pad_low", size))
    if 2 <= k <= n - 1:
        for size in flat_recipes(n - 1, k - 1):
            out.setdefault(size + comb(n - 1, k), ("shift_up", size))
    return out


def flat_antichain(n: int, k: int, m: int) -> MacWitness:
    """A maximal antichain of size m on levels k, k-1 of B_n, following flat_recipes."""
    recipe = flat_recipes(n, k).get(m)
    if recipe is None:
        raise NotAchievable(f"no flat recipe gives {m} on levels {k}/{k - 1} of B_{n}",
                            {"reason": "construction failed", "n": n, "k": k, "m": m})
    kind = recipe[0]
    if kind == "level":
        w = full_level(n, recipe[1])
    elif kind == "squashed":
        w = squashed_mac(n, k, recipe[1])
    elif kind == "separated":
        w = separated_antichain(n, k, m)
    elif kind == "pinned":
        w = pinned_pair_antichain(n, k, recipe[1])
    elif kind == "pad_low":
        w = lift_antichain(flat_antichain(n - 1, k, recipe[1]), "pad_low", k)
    else:
        w = lift_antichain(flat_antichain(n - 1, k - 1, recipe[1]), "shift_up", k)
    return _require_size(w, m)


# dispatch ------------------------------------------------------------------------------


def construct_mac(n: int, m: int, allow_singleton: bool = True) -> MacWitness:
    """A verified maximal antichain of size m in B_n, trying each construction in turn."""
    k = middle(n)
    if n < 1 or not 1 <= m <= comb(n, k):
        raise DomainError(f"m={m} outside [1, {comb(n, k)}] for n={n}")
    if m <= n:
        return _require_size(small_mac(n, m), m)
    lo, hi = theorem1_range(n)
    if m >= lo:
        return construct_large_mac(n, m)
    if n == 6 and m in range(7, 15):
        return _n6_fixture(m)
    if n >= 7:
        try:
            return _require_size(construct_mid_mac(n, m), m)
        except NotAchievable:
            pass
    for kk in range(3, n // 2 + 1):
        if binom(n - 1, kk - 1) <= m <= binom(n, kk - 1):
            try:
                return _require_size(bridge_antichain(n, kk, m), m)
            except NotAchievable:
                pass
    for kk in range(2, n + 1):
        if m in flat_recipes(n, kk):
            return flat_antichain(n, kk, m)
    if n >= 3 and m - (n - 1) > binom(n - 2, (n - 2) // 2) + 1:
        try:
            inner = construct_mac(n - 1, m - (n - 1), allow_singleton)
            return _require_size(lift_antichain(inner, "add_pairs"), m)
        except (NotAchievable, DomainError):
            pass
    if allow_singleton and n >= 2 and m - 1 >= 1:
        try:
            inner = construct_mac(n - 1, m - 1, allow_singleton)
            if 0 not in inner.members():
                return _require_size(lift_antichain(inner, "add_singleton"), m)
        except (NotAchievable, DomainError):
            pass
    raise NotAchievable(f"no construction reaches m={m} in B_{n}", {"reason": "construction failed", "n": n, "m": m})


# phi and friends ---------------------------------------------------------------------


def missing_size_witness(n: int) -> int:
    """A size that no maximal antichain of B_n has, just below the largest level."""
    if n < 5:
        raise DomainError("needs n >= 5")
    k = middle(n)
    t = jstar(k - 1) + 1
    m = comb(n, k) - t * (k - 1) + comb(t, 2) + 1
    assert not theorem1_member(n, m), (n, m)
    return m


def phi(n: int) -> int:
    """Smallest positive integer that is not the size of a maximal antichain in B_n."""
    if n < 1:
        raise DomainError("n must be positive")
    if n <= 6:
        sizes = brute_S(n)
        return sizes.complement(1, comb(n, n // 2) + 1).min
    k = middle(n)
    if n % 2 == 0:
        return comb(n, k) - psi(k).psi
    union = big_sigma(k, k * k) | big_sigma(k - 1, k * k)
    s = union.complement(0, k * k - 1).max
    return comb(n, k) - s


def phi_via_theorem1(n: int) -> int:
    """Smallest size in the near-top range rejected by the membership test."""
    lo, hi = theorem1_range(n)
    for m in range(lo, hi + 1):
        if not theorem1_member(n, m):
            return m
    return hi + 1


# brute force ---------------------------------------------------------------------------


def _incomparable_masks(n: int) -> list[int]:
    size = 1 << n
    everything = (1 << size) - 1
    out = []
    for x in range(size):
        comp = 0
        for y in range(size):
            if x & y == x or x & y == y:
                comp |= 1 << y
        out.append(everything & ~comp)
    return out


def brute_S(n: int, method: str = "cliques", budget: int | None = None) -> IntSpectrum:
    """Sizes of all maximal antichains of B_n by exhaustive search.

    ``cliques`` lists maximal sets of pairwise incomparable subsets with a
    pivoting Bron–Kerbosch search; ``all`` walks every antichain and keeps the
    ones to which nothing can be added.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if n > 7:
        raise DomainError("brute force is limited to n <= 7")
    if budget is None:
        if n == 7:
            raise DomainError("n = 7 needs an explicit node budget")
        budget = DEFAULT_BUDGET
    inc = _incomparable_masks(n)
    sizes: set[int] = set()
    nodes = 0

    if method == "all":
        everything = (1 << (1 << n)) - 1

        def walk(cands: int, free: int, size: int) -> None:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(nodes, budget)
            if free == 0:
                sizes.add(size)
            while cands:
                low = cands & -cands
                v = low.bit_length() - 1
                cands ^= low
                walk(cands & inc[v], free & inc[v], size + 1)

        walk(everything, everything, 0)
    elif method == "cliques":

        def expand(size: int, cands: int, excluded: int) -> None:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(nodes, budget)
            if cands == 0:
                if excluded == 0:
                    sizes.add(size)
                return
            union = cands | excluded
            pivot, best = 0, -1
            while union:
                low = union & -union
                u = low.bit_length() - 1
                union ^= low
                c = (cands & inc[u]).bit_count()
                if c > best:
                    pivot, best = u, c
            todo = cands & ~inc[pivot]
            while todo:
                low = todo & -todo
                v = low.bit_length() - 1
                todo ^= low
                expand(size + 1, cands & inc[v], excluded & inc[v])
                cands &= ~low
                excluded |= low

        expand(0, (1 << (1 << n)) - 1, 0)
    else:
        raise DomainError(f"unknown method {method!r}")
    return IntSpectrum.of(sizes)
