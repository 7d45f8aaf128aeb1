"""Piecewise-constant curves over a bounded universe.

Two carriers share the same breakpoint bookkeeping:

* :class:`MembershipCurve` keeps exact integer counts over one common
  denominator, so subject-counting semantics stays rational end to end.
* :class:`StepCurve` carries plain floats; t-norm combinations and hedged
  curves land here, where values are no longer guaranteed rational.

Pieces are right-open: ``breakpoints[0]`` is the universe ``lo``,
``breakpoints[-1]`` the universe ``hi``, and piece ``k`` covers
``[breakpoints[k], breakpoints[k+1])``.  Adjacent pieces with equal values
are always fused, so structural equality of curves is pointwise equality.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import EmptyPopulation, OutOfUniverse, UniverseMismatch
from .regions import Universe

__all__ = ["MembershipCurve", "StepCurve", "merge_breakpoints", "align_counts"]


def merge_breakpoints(
    a: Sequence[float], b: Sequence[float]
) -> tuple[float, ...]:
    """Sorted union of two sorted breakpoint sequences."""
    out: list[float] = []
    i = j = 0
    while i < len(a) or j < len(b):
        if j >= len(b) or (i < len(a) and a[i] <= b[j]):
            value = a[i]
            i += 1
            if j < len(b) and b[j] == value:
                j += 1
        else:
            value = b[j]
            j += 1
        if not out or out[-1] != value:
            out.append(value)
    return tuple(out)


def _resample(
    new_points: Sequence[float],
    old_points: Sequence[float],
    old_values: Sequence,
) -> list:
    """Value per new piece, read off the old piece containing it."""
    values = []
    j = 0
    last = len(old_points) - 2
    for k in range(len(new_points) - 1):
        left = new_points[k]
        while j < last and old_points[j + 1] <= left:
            j += 1
        values.append(old_values[j])
    return values


def _fuse_equal(
    points: Sequence[float], values: Sequence
) -> tuple[tuple[float, ...], tuple]:
    fused_points = [points[0]]
    fused_values: list = []
    for k, value in enumerate(values):
        if fused_values and value == fused_values[-1]:
            fused_points[-1] = points[k + 1]
        else:
            fused_values.append(value)
            fused_points.append(points[k + 1])
    return tuple(fused_points), tuple(fused_values)


def _validate_points(universe: Universe, points: Sequence[float], n_values: int) -> None:
    if len(points) != n_values + 1:
        raise ValueError(
            f"need one more breakpoint than pieces: {len(points)} vs {n_values}"
        )
    if points[0] != universe.lo or points[-1] != universe.hi:
        raise ValueError(
            f"breakpoints must span the universe {universe}, got "
            f"{points[0]}..{points[-1]}"
        )
    for k in range(len(points) - 1):
        if not points[k] < points[k + 1]:
            raise ValueError(f"breakpoints must be strictly increasing: {points}")


def _piece_index(points: Sequence[float], omega: float) -> int:
    if not points[0] <= omega < points[-1]:
        raise OutOfUniverse(
            f"{omega} outside curve domain [{points[0]}, {points[-1]})"
        )
    return bisect_right(points, omega) - 1


def _check_same_universe(a, b) -> None:
    if a.universe != b.universe:
        raise UniverseMismatch(
            f"curves live in different universes: {a.universe} vs {b.universe}"
        )


def _grid(universe: Universe, step: float) -> list[float]:
    if not step > 0:
        raise ValueError(f"sample step must be positive, got {step}")
    points = []
    i = 0
    while (omega := universe.lo + i * step) < universe.hi:
        points.append(omega)
        i += 1
    return points


@dataclass(frozen=True)
class MembershipCurve:
    """Exact step function with values ``counts[k] / denominator``."""

    universe: Universe
    breakpoints: tuple[float, ...]
    counts: tuple[int, ...]
    denominator: int

    def __post_init__(self) -> None:
        points = tuple(float(p) for p in self.breakpoints)
        counts = tuple(int(c) for c in self.counts)
        if self.denominator < 1:
            raise EmptyPopulation("membership curve needs a positive denominator")
        _validate_points(self.universe, points, len(counts))
        for count in counts:
            if not 0 <= count <= self.denominator:
                raise ValueError(
                    f"count {count} outside 0..{self.denominator}"
                )
        points, counts = _fuse_equal(points, counts)
        object.__setattr__(self, "breakpoints", points)
        object.__setattr__(self, "counts", counts)

    @classmethod
    def constant(
        cls, universe: Universe, count: int, denominator: int
    ) -> MembershipCurve:
        return cls(universe, (universe.lo, universe.hi), (count,), denominator)

    def count_at(self, omega: float) -> int:
        return self.counts[_piece_index(self.breakpoints, omega)]

    def value_at(self, omega: float) -> Fraction:
        return Fraction(self.count_at(omega), self.denominator)

    def float_at(self, omega: float) -> float:
        return self.count_at(omega) / self.denominator

    def complement(self) -> MembershipCurve:
        """Pointwise ``1 - value``, still exact."""
        counts = tuple(self.denominator - c for c in self.counts)
        return MembershipCurve(self.universe, self.breakpoints, counts, self.denominator)

    def as_step(self) -> StepCurve:
        values = tuple(c / self.denominator for c in self.counts)
        return StepCurve(self.universe, self.breakpoints, values)

    def map_float(self, fn: Callable[[float], float]) -> StepCurve:
        return self.as_step().map(fn)

    def sample(self, step: float) -> list[tuple[float, Fraction]]:
        """Evaluations at ``lo, lo + step, ...`` strictly below ``hi``."""
        return [(omega, self.value_at(omega)) for omega in _grid(self.universe, step)]


@dataclass(frozen=True)
class StepCurve:
    """Float-valued step function (t-norm results, hedged curves)."""

    universe: Universe
    breakpoints: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        points = tuple(float(p) for p in self.breakpoints)
        values = tuple(float(v) for v in self.values)
        _validate_points(self.universe, points, len(values))
        points, values = _fuse_equal(points, values)
        object.__setattr__(self, "breakpoints", points)
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, universe: Universe, value: float) -> StepCurve:
        return cls(universe, (universe.lo, universe.hi), (value,))

    def value_at(self, omega: float) -> float:
        return self.values[_piece_index(self.breakpoints, omega)]

    def map(self, fn: Callable[[float], float]) -> StepCurve:
        return StepCurve(self.universe, self.breakpoints, tuple(fn(v) for v in self.values))

    def combine(
        self, other: StepCurve, fn: Callable[[float, float], float]
    ) -> StepCurve:
        _check_same_universe(self, other)
        points = merge_breakpoints(self.breakpoints, other.breakpoints)
        left = _resample(points, self.breakpoints, self.values)
        right = _resample(points, other.breakpoints, other.values)
        values = tuple(fn(x, y) for x, y in zip(left, right))
        return StepCurve(self.universe, points, values)

    def sample(self, step: float) -> list[tuple[float, float]]:
        return [(omega, self.value_at(omega)) for omega in _grid(self.universe, step)]


def align_counts(
    curves: Sequence[MembershipCurve],
) -> tuple[tuple[float, ...], list[tuple[int, ...]]]:
    """Common breakpoint refinement with each curve's counts resampled onto it.

    Lets callers compare or combine exact curves with plain integer
    arithmetic; all curves must share one universe.
    """
    if not curves:
        raise ValueError("align_counts needs at least one curve")
    points: tuple[float, ...] = curves[0].breakpoints
    for curve in curves[1:]:
        _check_same_universe(curves[0], curve)
        points = merge_breakpoints(points, curve.breakpoints)
    resampled = [
        tuple(_resample(points, curve.breakpoints, curve.counts)) for curve in curves
    ]
    return points, resampled
