"""Runtime configuration: universe bounds, hedge exponents, output knobs.

Config files are flat ``key = value`` lines with ``#`` comments.  Command
line flags override file values, which override the built-in defaults
(universe [0, 80), very=2, more_or_less=0.5, essentially=3, step=1,
precision=6).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import ConfigError, InvalidInterval
from .regions import Universe
from .vague import DEFAULT_HEDGES

__all__ = ["Config", "load_config", "parse_universe"]

_FLOAT_KEYS = {
    "universe_lo",
    "universe_hi",
    "very",
    "more_or_less",
    "essentially",
    "step",
}
_INT_KEYS = {"precision", "svg_width", "svg_height"}


@dataclass(frozen=True)
class Config:
    universe: Universe = Universe(0.0, 80.0)
    hedges: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_HEDGES))
    step: float = 1.0
    precision: int = 6
    svg_width: int = 640
    svg_height: int = 360

    def __post_init__(self) -> None:
        if not self.step > 0:
            raise ConfigError(f"step must be positive, got {self.step}")
        if self.precision < 1:
            raise ConfigError(f"precision must be >= 1, got {self.precision}")
        if self.svg_width < 100 or self.svg_height < 80:
            raise ConfigError("svg dimensions are too small to render axes")
        for kind, exponent in self.hedges.items():
            if not exponent > 0:
                raise ConfigError(
                    f"hedge exponent {kind} must be positive, got {exponent}"
                )

    def override(self, **changes) -> Config:
        return replace(self, **changes)


def parse_universe(text: str) -> Universe:
    """Parse the ``LO:HI`` form used by the --universe flag."""
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigError(f"universe must look like LO:HI, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise ConfigError(f"universe bounds must be numbers, got {text!r}") from None
    try:
        return Universe(lo, hi)
    except InvalidInterval as exc:
        raise ConfigError(str(exc)) from None


def load_config(path: str | Path) -> Config:
    """Read a key = value config file and build a Config over the defaults."""
    values: dict[str, float] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        if key not in _FLOAT_KEYS | _INT_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = int(value) if key in _INT_KEYS else float(value)
        except ValueError:
            raise ConfigError(
                f"line {lineno}: {key} must be a number, got {value!r}"
            ) from None

    base = Config()
    lo = values.get("universe_lo", base.universe.lo)
    hi = values.get("universe_hi", base.universe.hi)
    try:
        universe = Universe(lo, hi)
    except InvalidInterval as exc:
        raise ConfigError(str(exc)) from None
    hedges = dict(base.hedges)
    for kind in ("very", "more_or_less", "essentially"):
        if kind in values:
            hedges[kind] = values[kind]
    return Config(
        universe=universe,
        hedges=hedges,
        step=values.get("step", base.step),
        precision=int(values.get("precision", base.precision)),
        svg_width=int(values.get("svg_width", base.svg_width)),
        svg_height=int(values.get("svg_height", base.svg_height)),
    )
