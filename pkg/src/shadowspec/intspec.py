"""Finite sets of integers stored as sorted, disjoint, non-adjacent closed runs."""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from typing import Iterable, Iterator


def _merge(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[list[int]] = []
    for lo, hi in sorted((int(lo), int(hi)) for lo, hi in pairs):
        if lo > hi:
            raise ValueError(f"empty run [{lo}, {hi}]")
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)


@dataclass(frozen=True)
class IntSpectrum:
    runs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "runs", _merge(self.runs))

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntSpectrum":
        return cls(tuple((v, v) for v in values))

    @classmethod
    def interval(cls, lo: int, hi: int) -> "IntSpectrum":
        return cls(((lo, hi),) if lo <= hi else ())

    @classmethod
    def from_runs(cls, runs: Iterable[Iterable[int]]) -> "IntSpectrum":
        return cls(tuple(tuple(r) for r in runs))

    def __contains__(self, x: object) -> bool:
        try:
            x = operator.index(x)
        except TypeError:
            return False
        lo_i, hi_i = 0, len(self.runs)
        while lo_i < hi_i:
            mid = (lo_i + hi_i) // 2
            lo, hi = self.runs[mid]
            if x < lo:
                hi_i = mid
            elif x > hi:
                lo_i = mid + 1
            else:
                return True
        return False

    def __iter__(self) -> Iterator[int]:
        for lo, hi in self.runs:
            yield from range(lo, hi + 1)

    def __len__(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.runs)

    def __bool__(self) -> bool:
        return bool(self.runs)

    def __or__(self, other: "IntSpectrum") -> "IntSpectrum":
        return IntSpectrum(self.runs + other.runs)

    def __and__(self, other: "IntSpectrum") -> "IntSpectrum":
        out = []
        i = j = 0
        a, b = self.runs, other.runs
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo <= hi:
                out.append((lo, hi))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return IntSpectrum(tuple(out))

    def complement(self, lo: int, hi: int) -> "IntSpectrum":
        """Values in [lo, hi] that are not members."""
        out = []
        cur = lo
        for a, b in self.runs:
            if b < cur:
                continue
            if a > hi:
                break
            if a > cur:
                out.append((cur, a - 1))
            cur = b + 1
            if cur > hi:
                break
        if cur <= hi:
            out.append((cur, hi))
        return IntSpectrum(tuple(out))

    def shift(self, d: int) -> "IntSpectrum":
        return IntSpectrum(tuple((lo + d, hi + d) for lo, hi in self.runs))

    def clip(self, lo: int, hi: int) -> "IntSpectrum":
        return self & IntSpectrum.interval(lo, hi)

    def reflect(self, pivot: int) -> "IntSpectrum":
        """{pivot - x : x in self}."""
        return IntSpectrum(tuple((pivot - hi, pivot - lo) for lo, hi in self.runs))

    @property
    def min(self) -> int:
        return self.runs[0][0]

    @property
    def max(self) -> int:
        return self.runs[-1][1]

    def to_json(self) -> str:
        return json.dumps({"runs": [list(r) for r in self.runs]})

    @classmethod
    def from_json(cls, text: str) -> "IntSpectrum":
        return cls.from_runs(json.loads(text)["runs"])

    def to_csv(self) -> str:
        return "".join(f"{lo},{hi}\n" for lo, hi in self.runs)

    @classmethod
    def from_csv(cls, text: str) -> "IntSpectrum":
        rows = [line.split(",") for line in text.splitlines() if line.strip()]
        return cls.from_runs((int(a), int(b)) for a, b in rows)

    def compact(self) -> str:
        """Runs as ``lo,hi`` joined by semicolons, one line."""
        return ";".join(f"{lo},{hi}" for lo, hi in self.runs)

    def __str__(self) -> str:
        if not self.runs:
            return "{}"
        return " ∪ ".join(f"{{{lo}}}" if lo == hi else f"[{lo},{hi}]" for lo, hi in self.runs)
