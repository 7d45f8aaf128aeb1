"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class VagueError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInterval(VagueError):
    """An interval endpoint is non-finite, or lo exceeds hi."""


class OutOfUniverse(VagueError):
    """A value or interval lies entirely outside the declared universe."""


class UniverseMismatch(VagueError):
    """Operands were built over different universes."""


class ConstraintViolation(VagueError):
    """A truth/false membership pair breaks t + f <= 1 or leaves [0, 1]."""


class InvalidHedge(VagueError):
    """Bad hedge exponent, or a hedge used where no semantics is defined."""


class RangeError(VagueError):
    """A t-norm argument lies outside the unit interval."""


class ContradictoryJudgment(VagueError):
    """A subject's 'for' and 'against' judgments overlap for one name."""

    def __init__(self, subject: str, name: str, overlap: object):
        self.subject = subject
        self.name = name
        self.overlap = overlap
        super().__init__(
            f"subject {subject!r}, name {name!r}: "
            f"'for' and 'against' judgments overlap on {overlap}"
        )


class EmptyPopulation(VagueError):
    """An aggregate was requested over zero subjects."""


class PopulationMismatch(VagueError):
    """Two events do not share the same ordered subject set."""


class UnknownAtom(VagueError):
    """An expression names an atom that has no binding."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown atom {name!r}")


class LexError(VagueError):
    """Illegal character in an expression."""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"{message} at position {position}")


class ParseError(VagueError):
    """Expression text violates the grammar."""

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(
            f"expected {expected} at position {position}, found {found}"
        )


class UnsupportedComparison(VagueError):
    """compare needs a single and/or of two distinct atoms."""


class DatasetError(VagueError):
    """Malformed judgment dataset row or header."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConfigError(VagueError):
    """Malformed configuration file or invalid configuration value."""
