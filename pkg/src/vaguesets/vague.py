"""Truth/false membership pairs and their connective and hedge algebra.

A vague value is a pair ``(t, f)`` with ``t + f <= 1``: ``t`` is the evidence
for an element, ``f`` the evidence against it, and the actual grade of
membership lies somewhere in the span ``[t, 1 - f]``.  Connectives are the
classic componentwise ones (min of truths with max of falses for "and", the
dual for "or", swap for "not"); hedges raise both bounds of the span to a
power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .curves import StepCurve, _fuse_equal, _piece_index, _resample, _validate_points
from .curves import _check_same_universe, _grid, merge_breakpoints
from .errors import ConstraintViolation, InvalidHedge
from .regions import Universe

__all__ = ["VagueValue", "VagueSet", "VagueCurve", "DEFAULT_HEDGES"]

# Exponents for the named hedges; overridable through configuration.
DEFAULT_HEDGES: dict[str, float] = {
    "very": 2.0,
    "more_or_less": 0.5,
    "essentially": 3.0,
}

# Values computed by floating arithmetic may overshoot the constraints by
# rounding noise; up to this much is clamped, anything larger is an error.
_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class VagueValue:
    """Pair ``(t, f)`` with ``0 <= t``, ``0 <= f`` and ``t + f <= 1``."""

    t: float
    f: float

    def __post_init__(self) -> None:
        t, f = float(self.t), float(self.f)
        if not (math.isfinite(t) and math.isfinite(f)):
            raise ConstraintViolation(f"memberships must be finite, got ({t}, {f})")
        if t < -_TOLERANCE or f < -_TOLERANCE or t > 1 + _TOLERANCE or f > 1 + _TOLERANCE:
            raise ConstraintViolation(
                f"memberships must lie in [0, 1], got ({t}, {f})"
            )
        if t + f > 1 + _TOLERANCE:
            raise ConstraintViolation(f"t + f exceeds 1: {t} + {f} = {t + f}")
        t = min(max(t, 0.0), 1.0)
        f = min(max(f, 0.0), 1.0)
        if t + f > 1.0:
            f = 1.0 - t
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "f", f)

    @property
    def span(self) -> tuple[float, float]:
        """The interval ``[t, 1 - f]`` bounding the actual grade."""
        return (self.t, 1.0 - self.f)

    def __and__(self, other: VagueValue) -> VagueValue:
        return VagueValue(min(self.t, other.t), max(self.f, other.f))

    def __or__(self, other: VagueValue) -> VagueValue:
        return VagueValue(max(self.t, other.t), min(self.f, other.f))

    def __invert__(self) -> VagueValue:
        return VagueValue(self.f, self.t)

    def hedge(self, exponent: float) -> VagueValue:
        """Concentrate (e > 1) or dilate (e < 1) both bounds of the span.

        Maps ``(t, f)`` to ``(t**e, 1 - (1 - f)**e)``; since ``t <= 1 - f``,
        the result still satisfies ``t + f <= 1``.
        """
        if not (isinstance(exponent, (int, float)) and math.isfinite(exponent)) or exponent <= 0:
            raise InvalidHedge(f"hedge exponent must be positive, got {exponent!r}")
        return VagueValue(self.t ** exponent, 1.0 - (1.0 - self.f) ** exponent)

    def __str__(self) -> str:
        return f"({self.t}, {self.f})"


class VagueSet:
    """Finite universe of named elements, each carrying one vague value."""

    def __init__(self, assignment: Mapping[str, VagueValue]):
        items = dict(assignment)
        for element in items:
            if not isinstance(element, str) or not element:
                raise ValueError(f"element names must be non-empty strings: {element!r}")
        self._assignment = items

    @property
    def elements(self) -> tuple[str, ...]:
        return tuple(self._assignment)

    def __getitem__(self, element: str) -> VagueValue:
        return self._assignment[element]

    def __contains__(self, element: str) -> bool:
        return element in self._assignment

    def __len__(self) -> int:
        return len(self._assignment)

    def __iter__(self) -> Iterator[str]:
        return iter(self._assignment)

    def span(self, element: str) -> tuple[float, float]:
        return self._assignment[element].span

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VagueSet):
            return NotImplemented
        return self._assignment == other._assignment

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {v}" for k, v in self._assignment.items())
        return f"VagueSet({{{body}}})"


@dataclass(frozen=True)
class VagueCurve:
    """Piecewise-constant map from the universe to vague values."""

    universe: Universe
    breakpoints: tuple[float, ...]
    pieces: tuple[VagueValue, ...]

    def __post_init__(self) -> None:
        points = tuple(float(p) for p in self.breakpoints)
        _validate_points(self.universe, points, len(self.pieces))
        points, pieces = _fuse_equal(points, tuple(self.pieces))
        object.__setattr__(self, "breakpoints", points)
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def constant(cls, universe: Universe, value: VagueValue) -> VagueCurve:
        return cls(universe, (universe.lo, universe.hi), (value,))

    def value_at(self, omega: float) -> VagueValue:
        return self.pieces[_piece_index(self.breakpoints, omega)]

    def map(self, fn: Callable[[VagueValue], VagueValue]) -> VagueCurve:
        return VagueCurve(self.universe, self.breakpoints, tuple(fn(p) for p in self.pieces))

    def combine(
        self, other: VagueCurve, fn: Callable[[VagueValue, VagueValue], VagueValue]
    ) -> VagueCurve:
        _check_same_universe(self, other)
        points = merge_breakpoints(self.breakpoints, other.breakpoints)
        left = _resample(points, self.breakpoints, self.pieces)
        right = _resample(points, other.breakpoints, other.pieces)
        return VagueCurve(self.universe, points, tuple(fn(x, y) for x, y in zip(left, right)))

    def __and__(self, other: VagueCurve) -> VagueCurve:
        return self.combine(other, lambda a, b: a & b)

    def __or__(self, other: VagueCurve) -> VagueCurve:
        return self.combine(other, lambda a, b: a | b)

    def __invert__(self) -> VagueCurve:
        return self.map(lambda a: ~a)

    def hedge(self, exponent: float) -> VagueCurve:
        return self.map(lambda a: a.hedge(exponent))

    def sample(self, step: float) -> list[tuple[float, VagueValue]]:
        return [(omega, self.value_at(omega)) for omega in _grid(self.universe, step)]

    def lower_step(self) -> StepCurve:
        """The t(omega) bound as a float step curve."""
        return StepCurve(self.universe, self.breakpoints, tuple(p.t for p in self.pieces))

    def upper_step(self) -> StepCurve:
        """The 1 - f(omega) bound as a float step curve."""
        return StepCurve(
            self.universe, self.breakpoints, tuple(1.0 - p.f for p in self.pieces)
        )
