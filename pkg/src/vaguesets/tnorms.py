"""The three classic t-norms and their dual t-conorms.

Minimum, probabilistic product and the Lukasiewicz norm, on scalars in
``[0, 1]`` and lifted pointwise to step curves.  The enumeration is closed
on purpose: comparison output stays well-defined with exactly these three.
"""

from __future__ import annotations

import math
from enum import Enum

from .curves import MembershipCurve, StepCurve
from .errors import RangeError

__all__ = ["TNorm", "tnorm_apply", "tconorm_apply", "curve_tnorm", "curve_tconorm"]


class TNorm(Enum):
    MINIMUM = "min"
    PRODUCT = "prod"
    LUKASIEWICZ = "luk"

    @classmethod
    def from_name(cls, name: str) -> TNorm:
        aliases = {
            "min": cls.MINIMUM,
            "minimum": cls.MINIMUM,
            "prod": cls.PRODUCT,
            "product": cls.PRODUCT,
            "luk": cls.LUKASIEWICZ,
            "lukasiewicz": cls.LUKASIEWICZ,
        }
        try:
            return aliases[name.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown t-norm {name!r}") from None


def _check_unit(x: float) -> float:
    if not (isinstance(x, (int, float)) and math.isfinite(x) and 0.0 <= x <= 1.0):
        raise RangeError(f"t-norm arguments must lie in [0, 1], got {x!r}")
    return float(x)


def tnorm_apply(kind: TNorm, a: float, b: float) -> float:
    """min(a, b), a*b, or max(a + b - 1, 0) depending on ``kind``."""
    a, b = _check_unit(a), _check_unit(b)
    if kind is TNorm.MINIMUM:
        return min(a, b)
    if kind is TNorm.PRODUCT:
        return a * b
    return max(a + b - 1.0, 0.0)


def tconorm_apply(kind: TNorm, a: float, b: float) -> float:
    """Dual of :func:`tnorm_apply`: max, probabilistic sum, bounded sum."""
    a, b = _check_unit(a), _check_unit(b)
    if kind is TNorm.MINIMUM:
        return max(a, b)
    if kind is TNorm.PRODUCT:
        return a + b - a * b
    return min(a + b, 1.0)


def _as_step(curve: MembershipCurve | StepCurve) -> StepCurve:
    return curve.as_step() if isinstance(curve, MembershipCurve) else curve


def curve_tnorm(
    kind: TNorm,
    a: MembershipCurve | StepCurve,
    b: MembershipCurve | StepCurve,
) -> StepCurve:
    """Pointwise t-norm of two step curves after breakpoint refinement."""
    return _as_step(a).combine(_as_step(b), lambda x, y: tnorm_apply(kind, x, y))


def curve_tconorm(
    kind: TNorm,
    a: MembershipCurve | StepCurve,
    b: MembershipCurve | StepCurve,
) -> StepCurve:
    return _as_step(a).combine(_as_step(b), lambda x, y: tconorm_apply(kind, x, y))
