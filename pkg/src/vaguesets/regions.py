"""Exact set algebra on finite unions of half-open intervals.

Every region lives inside a bounded universe ``[lo, hi)``.  A :class:`Region`
is the canonical form of a finite union of half-open intervals: parts are
sorted, pairwise disjoint, never adjacent, and clipped to the universe.
Operations only ever reuse endpoints that already exist, so region equality
is exact — no epsilon comparisons anywhere.

The half-open convention closes the algebra under complement: the complement
of a union of ``[a, b)`` parts is again a union of such parts, with no
boundary points counted twice or dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInterval, OutOfUniverse, UniverseMismatch

__all__ = ["Universe", "Interval", "Region", "normalize", "breakpoints"]


@dataclass(frozen=True, slots=True)
class Universe:
    """Bounded carrier ``[lo, hi)`` that all regions are subsets of."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidInterval(
                f"universe bounds must be finite, got [{self.lo}, {self.hi})"
            )
        if not self.lo < self.hi:
            raise InvalidInterval(
                f"universe needs lo < hi, got [{self.lo}, {self.hi})"
            )

    def contains(self, omega: float) -> bool:
        return self.lo <= omega < self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi})"


@dataclass(frozen=True, slots=True)
class Interval:
    """Non-empty half-open interval ``[lo, hi)``."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidInterval(
                f"interval endpoints must be finite, got [{self.lo}, {self.hi})"
            )
        if not self.lo < self.hi:
            raise InvalidInterval(
                f"interval needs lo < hi, got [{self.lo}, {self.hi})"
            )

    def contains(self, omega: float) -> bool:
        return self.lo <= omega < self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi})"


def _merge(pairs: Iterable[tuple[float, float]]) -> tuple[Interval, ...]:
    """Merge raw (lo, hi) pairs into sorted, disjoint, non-adjacent parts."""
    ordered = sorted(pairs)
    parts: list[Interval] = []
    for lo, hi in ordered:
        # Adjacent parts fuse too (hi == next lo), keeping equality canonical.
        if parts and lo <= parts[-1].hi:
            if hi > parts[-1].hi:
                parts[-1] = Interval(parts[-1].lo, hi)
        else:
            parts.append(Interval(lo, hi))
    return tuple(parts)


@dataclass(frozen=True, slots=True)
class Region:
    """Canonical union of disjoint half-open intervals inside a universe.

    Two regions are equal iff their universes and part tuples are identical;
    the constructor enforces the canonical invariants so equality really is
    set equality.
    """

    universe: Universe
    parts: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        prev_hi = None
        for part in self.parts:
            if part.lo < self.universe.lo or part.hi > self.universe.hi:
                raise OutOfUniverse(f"part {part} outside universe {self.universe}")
            if prev_hi is not None and not prev_hi < part.lo:
                raise InvalidInterval(
                    f"parts must be sorted, disjoint and non-adjacent, got {self.parts}"
                )
            prev_hi = part.hi

    @classmethod
    def empty(cls, universe: Universe) -> Region:
        return cls(universe, ())

    @classmethod
    def full(cls, universe: Universe) -> Region:
        return cls(universe, (Interval(universe.lo, universe.hi),))

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[float, float]], universe: Universe
    ) -> Region:
        """Build the canonical union of raw (lo, hi) pairs, clipped to the universe.

        Pairs with ``lo == hi`` contribute nothing.  A non-empty pair whose
        intersection with the universe is empty raises :class:`OutOfUniverse`;
        a partially covered pair is silently clipped.
        """
        cleaned: list[tuple[float, float]] = []
        for raw_lo, raw_hi in pairs:
            lo, hi = float(raw_lo), float(raw_hi)
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise InvalidInterval(f"endpoints must be finite, got [{lo}, {hi})")
            if lo > hi:
                raise InvalidInterval(f"interval has lo > hi: [{lo}, {hi})")
            if lo == hi:
                continue
            clip_lo = max(lo, universe.lo)
            clip_hi = min(hi, universe.hi)
            if clip_lo >= clip_hi:
                raise OutOfUniverse(
                    f"[{lo}, {hi}) lies entirely outside universe {universe}"
                )
            cleaned.append((clip_lo, clip_hi))
        return cls(universe, _merge(cleaned))

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def contains(self, omega: float) -> bool:
        for part in self.parts:
            if omega < part.lo:
                return False
            if omega < part.hi:
                return True
        return False

    def __contains__(self, omega: float) -> bool:
        return self.contains(omega)

    def _check_universe(self, other: Region) -> None:
        if self.universe != other.universe:
            raise UniverseMismatch(
                f"regions live in different universes: "
                f"{self.universe} vs {other.universe}"
            )

    def union(self, other: Region) -> Region:
        self._check_universe(other)
        pairs = [(p.lo, p.hi) for p in self.parts]
        pairs += [(p.lo, p.hi) for p in other.parts]
        return Region(self.universe, _merge(pairs))

    def intersect(self, other: Region) -> Region:
        self._check_universe(other)
        out: list[Interval] = []
        a, b = self.parts, other.parts
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i].lo, b[j].lo)
            hi = min(a[i].hi, b[j].hi)
            if lo < hi:
                out.append(Interval(lo, hi))
            # Advance whichever part ends first; ties advance the left operand.
            if a[i].hi <= b[j].hi:
                i += 1
            else:
                j += 1
        return Region(self.universe, tuple(out))

    def complement(self) -> Region:
        out: list[Interval] = []
        cursor = self.universe.lo
        for part in self.parts:
            if cursor < part.lo:
                out.append(Interval(cursor, part.lo))
            cursor = part.hi
        if cursor < self.universe.hi:
            out.append(Interval(cursor, self.universe.hi))
        return Region(self.universe, tuple(out))

    def symdiff(self, other: Region) -> Region:
        return self.union(other).intersect(self.intersect(other).complement())

    __or__ = union
    __and__ = intersect
    __invert__ = complement
    __xor__ = symdiff

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        return " u ".join(str(p) for p in self.parts)


def normalize(
    pairs: Iterable[tuple[float, float]], universe: Universe
) -> Region:
    """Alias for :meth:`Region.from_pairs`."""
    return Region.from_pairs(pairs, universe)


def breakpoints(
    regions: Sequence[Region], universe: Universe | None = None
) -> tuple[float, ...]:
    """Sorted distinct part endpoints of ``regions`` plus universe endpoints.

    The universe is taken from the first region unless given explicitly;
    it must be given when ``regions`` is empty.
    """
    regions = list(regions)
    if universe is None:
        if not regions:
            raise ValueError("breakpoints of no regions needs an explicit universe")
        universe = regions[0].universe
    points = {universe.lo, universe.hi}
    for region in regions:
        if region.universe != universe:
            raise UniverseMismatch(
                f"region universe {region.universe} differs from {universe}"
            )
        for part in region.parts:
            points.add(part.lo)
            points.add(part.hi)
    return tuple(sorted(points))
