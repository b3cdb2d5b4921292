"""Bitset sets and uniform families: shadow, shade, squashed order, antichains.

A set is an ``int`` whose bit ``i-1`` is set when element ``i`` belongs to it.
For k-sets, ascending integer order is exactly squashed (colex) order, since
both compare the largest element of the symmetric difference.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, DomainError, ParseError

MAX_N = 64
DEFAULT_BUDGET = 20_000_000

ElementSet = int


def elset(elements: Iterable[int]) -> ElementSet:
    bits = 0
    for x in elements:
        if not 1 <= x <= MAX_N:
            raise DomainError(f"element {x} outside [1, {MAX_N}]")
        bits |= 1 << (x - 1)
    return bits


def elements(bits: ElementSet) -> tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length())
        bits ^= low
    return tuple(out)


def card(bits: ElementSet) -> int:
    return bits.bit_count()


def ground_mask(n: int) -> int:
    return (1 << n) - 1


def subsets_removing_one(bits: ElementSet) -> Iterator[ElementSet]:
    rest = bits
    while rest:
        low = rest & -rest
        yield bits ^ low
        rest ^= low


def level(n: int, k: int) -> list[ElementSet]:
    """All k-subsets of [n] in squashed order (Gosper's hack)."""
    if k < 0 or k > n:
        return []
    if k == 0:
        return [0]
    out = []
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        out.append(x)
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
    return out


@dataclass(frozen=True)
class UniformFamily:
    """A k-uniform family over [n], stored sorted in squashed order."""

    n: int
    k: int
    members: tuple[ElementSet, ...] = field(default=())

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise DomainError(f"ground size {self.n} outside [0, {MAX_N}]")
        if not 0 <= self.k <= self.n:
            raise DomainError(f"k={self.k} outside [0, {self.n}]")
        full = ground_mask(self.n)
        members = tuple(sorted(set(self.members)))
        for m in members:
            if m & ~full:
                raise DomainError(f"{elements(m)} not inside [{self.n}]")
            if m.bit_count() != self.k:
                raise DomainError(f"{elements(m)} is not a {self.k}-set")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "UniformFamily":
        return cls(n, k, tuple(elset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.members)

    def __contains__(self, bits: object) -> bool:
        return bits in set(self.members)

    def as_lists(self) -> list[list[int]]:
        return [list(elements(m)) for m in self.members]


def shadow_set(members: Iterable[ElementSet]) -> set[ElementSet]:
    out: set[ElementSet] = set()
    for m in members:
        out.update(subsets_removing_one(m))
    return out


def shade_set(members: Iterable[ElementSet], n: int) -> set[ElementSet]:
    full = ground_mask(n)
    out: set[ElementSet] = set()
    for m in members:
        free = full & ~m
        while free:
            low = free & -free
            out.add(m | low)
            free ^= low
    return out


def shadow(F: UniformFamily) -> UniformFamily:
    """All (k-1)-sets contained in some member of ``F``."""
    if not F.members:
        return UniformFamily(F.n, max(F.k - 1, 0))
    if F.k == 0:
        raise DomainError("the empty set has no shadow")
    return UniformFamily(F.n, F.k - 1, tuple(shadow_set(F.members)))


def shade(G: UniformFamily, n: int | None = None) -> UniformFamily:
    """All (k+1)-supersets inside [n] of members of ``G``."""
    n = G.n if n is None else n
    if not G.members:
        return UniformFamily(n, min(G.k + 1, n))
    if G.k >= n:
        raise DomainError(f"{G.k}-sets have no shade inside [{n}]")
    return UniformFamily(n, G.k + 1, tuple(shade_set(G.members, n)))


# squashed order -----------------------------------------------------------


def squash_rank(bits: ElementSet) -> int:
    """1-indexed position of a k-set among all k-sets in squashed order."""
    r = 0
    for i, x in enumerate(elements(bits), start=1):
        r += comb(x - 1, i)
    return r + 1


def squash_unrank(k: int, m: int) -> ElementSet:
    """The m-th k-set (1-indexed) in squashed order."""
    if k < 1 or m < 1:
        raise DomainError("need k >= 1 and m >= 1")
    r = m - 1
    bits = 0
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= r:
            c += 1
        r -= comb(c, i)
        bits |= 1 << c
    if bits >> MAX_N:
        raise DomainError(f"rank {m} needs elements beyond {MAX_N}")
    return bits


def squash_prefix(k: int, m: int, n: int | None = None) -> UniformFamily:
    """The first m k-sets in squashed order, over [n] (smallest fitting n by default)."""
    if k < 1 or m < 0:
        raise DomainError("need k >= 1 and m >= 0")
    if m == 0:
        return UniformFamily(k if n is None else n, k)
    last = squash_unrank(k, m)
    need = last.bit_length()
    if n is None:
        n = need
    elif n < need:
        raise DomainError(f"first {m} {k}-sets do not fit in [{n}]")
    members = []
    x = (1 << k) - 1
    for _ in range(m):
        members.append(x)
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
    return UniformFamily(n, k, tuple(members))


def marginal_shadow_vector(members: UniformFamily | Sequence[ElementSet]) -> tuple[int, ...]:
    """New-shadow counts when adding members one at a time, in the given order."""
    seq = members.members if isinstance(members, UniformFamily) else members
    seen: set[ElementSet] = set()
    out = []
    for m in seq:
        before = len(seen)
        seen.update(subsets_removing_one(m))
        out.append(len(seen) - before)
    return tuple(out)


# antichains ---------------------------------------------------------------


def _scan_closures(n: int, sets: Sequence[ElementSet]) -> tuple[bool, bool]:
    size = 1 << n
    marks = np.zeros(size, dtype=bool)
    marks[np.fromiter(sets, dtype=np.int64, count=len(sets))] = True
    down = marks.copy()
    up = marks.copy()
    strict = np.zeros(size, dtype=bool)
    for i in range(n):
        sv = strict.reshape(-1, 2, 1 << i)
        mv = marks.reshape(-1, 2, 1 << i)
        sv[:, 0, :] |= mv[:, 1, :]
    for i in range(n):
        dv = down.reshape(-1, 2, 1 << i)
        dv[:, 0, :] |= dv[:, 1, :]
        uv = up.reshape(-1, 2, 1 << i)
        uv[:, 1, :] |= uv[:, 0, :]
        sv = strict.reshape(-1, 2, 1 << i)
        sv[:, 0, :] |= sv[:, 1, :]
    antichain = not bool(np.any(marks & strict))
    return antichain, antichain and bool(np.all(down | up))


def _level_closures(n: int, sets: Sequence[ElementSet], limit: int) -> tuple[bool, bool]:
    # Any addable set can be moved into [lowest level, highest level] of A.
    by_level: dict[int, set[ElementSet]] = {}
    for s in sets:
        by_level.setdefault(s.bit_count(), set()).add(s)
    lo, hi = min(by_level), max(by_level)
    below: dict[int, set[ElementSet]] = {hi: set()}
    for j in range(hi - 1, lo - 1, -1):
        below[j] = shadow_set(by_level.get(j + 1, set()) | below[j + 1])
        if len(below[j]) > limit:
            raise BudgetExceeded(len(below[j]), limit)
    above: dict[int, set[ElementSet]] = {lo: set()}
    for j in range(lo + 1, hi + 1):
        above[j] = shade_set(by_level.get(j - 1, set()) | above[j - 1], n)
        if len(above[j]) > limit:
            raise BudgetExceeded(len(above[j]), limit)
    for j, members in by_level.items():
        if members & below[j]:
            return False, False
    for j in range(lo, hi + 1):
        covered = len(by_level.get(j, set()) | below[j] | above[j])
        if covered != comb(n, j):
            return True, False
    return True, True


def is_maximal_antichain(
    sets: Iterable[ElementSet], n: int, method: str = "auto", limit: int = DEFAULT_BUDGET
) -> tuple[bool, bool]:
    """Return ``(is_antichain, is_maximal)`` for a collection of subsets of [n].

    ``method`` is ``"scan"`` (closure over all 2^n sets, n <= 20), ``"levels"``
    (closures restricted to the levels spanned by the collection) or ``"auto"``.
    """
    sets = sorted(set(sets))
    full = ground_mask(n)
    for s in sets:
        if s & ~full:
            raise DomainError(f"{elements(s)} not inside [{n}]")
    if not sets:
        return True, False
    if method == "auto":
        method = "scan" if n <= 16 else "levels"
    if method == "scan":
        if n > 20:
            raise DomainError("full scan is limited to n <= 20")
        return _scan_closures(n, sets)
    if method == "levels":
        return _level_closures(n, sets, limit)
    raise DomainError(f"unknown method {method!r}")


# exhaustive enumeration ---------------------------------------------------


def family_count(n: int, k: int, t: int) -> int:
    return comb(comb(n, k), t)


def split_ranges(N: int, t: int, parts: int) -> list[range]:
    """Split the first-index range of t-subsets of ``range(N)`` into balanced shards."""
    if t < 1 or N < t:
        return [range(0)]
    weights = [comb(N - 1 - i, t - 1) for i in range(N - t + 1)]
    total = sum(weights)
    parts = max(1, min(parts, len(weights)))
    out, start, acc = [], 0, 0
    for i, w in enumerate(weights):
        acc += w
        if acc * parts >= total * (len(out) + 1) and len(out) < parts - 1:
            out.append(range(start, i + 1))
            start = i + 1
    out.append(range(start, len(weights)))
    return [r for r in out if len(r)]


def enumerate_uniform_families(
    n: int,
    k: int,
    t: int,
    visitor: Callable[[tuple[ElementSet, ...]], None],
    budget: int = DEFAULT_BUDGET,
    first: range | None = None,
) -> int:
    """Call ``visitor`` on every t-subset of binom([n], k); return the number visited.

    Families are tuples of members in squashed order, produced in lexicographic
    order of member indices. ``first`` restricts the index of the first member,
    which is how the search space is sharded.
    """
    required = family_count(n, k, t)
    if required > budget:
        raise BudgetExceeded(required, budget)
    sets = level(n, k)
    N = len(sets)
    if t == 0:
        visitor(())
        return 1
    count = 0
    for i in first if first is not None else range(N):
        head = sets[i]
        for rest in combinations(sets[i + 1 :], t - 1):
            visitor((head,) + rest)
            count += 1
    return count


def exhaustive_min_shadow(n: int, k: int, t: int, node_budget: int = 50_000_000) -> int:
    """Minimum |shadow| over all t-families in binom([n], k), by exhaustive search.

    Branch and bound over member indices. Two facts keep it exact: shadows only
    grow as members are added, and any family can be relabelled so that it
    contains {1..k}, so that set is fixed as the first member.
    """
    sets = level(n, k)
    N = len(sets)
    if t > N or k < 1:
        raise DomainError(f"no {t}-family of {k}-subsets of [{n}]")
    if t == 0:
        return 0
    index = {s: i for i, s in enumerate(level(n, k - 1))}
    masks = []
    for s in sets:
        m = 0
        for sub in subsets_removing_one(s):
            m |= 1 << index[sub]
        masks.append(m)
    best = t * k + 1
    nodes = 0

    def dfs(start: int, depth: int, current: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(nodes, node_budget)
        size = current.bit_count()
        if depth == t:
            if size < best:
                best = size
            return
        if size >= best:
            return
        need = t - depth
        if size == best - 1:
            # only members adding nothing new are allowed from here on
            free = sum(1 for j in range(start, N) if masks[j] & ~current == 0)
            if free < need:
                return
        for j in range(start, N - need + 1):
            dfs(j + 1, depth + 1, current | masks[j])

    dfs(1, 1, masks[0])
    return best


# text format ----------------------------------------------------------------


def format_family_text(n: int, sets: Iterable[ElementSet], claims: dict | None = None) -> str:
    """Header ``n=<n>``, ``# key=value`` claim lines, then one comma-separated set per line."""
    lines = [f"n={n}"]
    for key, value in (claims or {}).items():
        lines.append(f"# {key}={value}")
    lines += [",".join(map(str, elements(s))) or "{}" for s in sorted(set(sets))]
    return "\n".join(lines) + "\n"


def parse_family_text(text: str) -> tuple[int, list[ElementSet], dict[str, str]]:
    """Inverse of format_family_text. Blank lines are skipped and ``{}`` is the empty set."""
    rows = text.splitlines()
    while rows and not rows[0].strip():
        rows.pop(0)
    if not rows or not rows[0].strip().startswith("n="):
        raise ParseError("first line must be n=<n>")
    try:
        n = int(rows[0].strip()[2:])
    except ValueError as exc:
        raise ParseError(f"bad header {rows[0]!r}") from exc
    if not 0 <= n <= MAX_N:
        raise ParseError(f"n={n} outside [0, {MAX_N}]")
    claims: dict[str, str] = {}
    sets: list[ElementSet] = []
    for lineno, raw in enumerate(rows[1:], start=2):
        line = raw.strip()
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition("=")
            if sep:
                claims[key.strip()] = value.strip()
            continue
        if not line:
            continue
        if line == "{}":
            sets.append(0)
            continue
        try:
            xs = [int(x) for x in line.split(",")]
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {raw!r} is not a list of integers") from exc
        if any(not 1 <= x <= n for x in xs):
            raise ParseError(f"line {lineno}: element outside [1, {n}]")
        sets.append(elset(xs))
    return n, sets, claims
