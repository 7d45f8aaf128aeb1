"""Subject-by-subject interval judgments and exact membership curves.

Each subject in a survey assigns a region of the universe to each name
("young_man covers ages 14 to 27, say").  A name's row across all subjects
is a :class:`VagueEvent`; its membership curve at a point is the fraction of
subjects whose region contains that point — an exact rational with the
population size as denominator.  Set operations on events act subject by
subject (index-aligned) before any averaging, which is what puts the
combined curves between the Lukasiewicz and minimum t-norm envelopes.

Judgments carry a polarity: ``for`` is the ordinary reading, ``against``
records explicit counter-evidence.  The two must not overlap for any
subject/name pair; their separate counts yield the (t, f) curve of a name.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .curves import MembershipCurve
from .errors import (
    ContradictoryJudgment,
    EmptyPopulation,
    PopulationMismatch,
    UniverseMismatch,
    UnknownAtom,
)
from .regions import Region, Universe, breakpoints
from .vague import VagueCurve, VagueValue

__all__ = [
    "FOR",
    "AGAINST",
    "Judgment",
    "VagueEvent",
    "SelectionMatrix",
    "build_matrix",
    "membership",
    "mink_combine",
    "derive_vague_curve",
]

FOR = "for"
AGAINST = "against"
POLARITIES = (FOR, AGAINST)


@dataclass(frozen=True, slots=True)
class Judgment:
    """One subject's region for one name; may be empty ("nothing qualifies")."""

    subject: str
    name: str
    region: Region
    polarity: str = FOR

    def __post_init__(self) -> None:
        if not self.subject:
            raise ValueError("judgment subject must be non-empty")
        if not self.name:
            raise ValueError("judgment name must be non-empty")
        if self.polarity not in POLARITIES:
            raise ValueError(f"polarity must be one of {POLARITIES}, got {self.polarity!r}")


@dataclass(frozen=True)
class VagueEvent:
    """A name's row: one region per subject, in matrix subject order."""

    name: str
    subjects: tuple[str, ...]
    regions: tuple[Region, ...]

    def __post_init__(self) -> None:
        if len(self.subjects) != len(self.regions):
            raise ValueError(
                f"{len(self.subjects)} subjects but {len(self.regions)} regions"
            )
        for region in self.regions[1:]:
            if region.universe != self.regions[0].universe:
                raise UniverseMismatch("event regions span multiple universes")

    @property
    def universe(self) -> Universe:
        if not self.regions:
            raise EmptyPopulation(f"event {self.name!r} has no subjects")
        return self.regions[0].universe

    def membership(self) -> MembershipCurve:
        """Exact averaged-indicator curve: count of covering subjects / |M|."""
        size = len(self.subjects)
        if size == 0:
            raise EmptyPopulation(f"event {self.name!r} has no subjects")
        points = breakpoints(self.regions)
        counts = []
        for k in range(len(points) - 1):
            left = points[k]
            counts.append(sum(1 for region in self.regions if region.contains(left)))
        return MembershipCurve(self.universe, points, tuple(counts), size)

    def _check_aligned(self, other: VagueEvent) -> None:
        if self.subjects != other.subjects:
            raise PopulationMismatch(
                f"events {self.name!r} and {other.name!r} have different subjects"
            )

    def intersect(self, other: VagueEvent) -> VagueEvent:
        self._check_aligned(other)
        regions = tuple(a.intersect(b) for a, b in zip(self.regions, other.regions))
        return VagueEvent(f"({self.name} and {other.name})", self.subjects, regions)

    def union(self, other: VagueEvent) -> VagueEvent:
        self._check_aligned(other)
        regions = tuple(a.union(b) for a, b in zip(self.regions, other.regions))
        return VagueEvent(f"({self.name} or {other.name})", self.subjects, regions)

    def symdiff(self, other: VagueEvent) -> VagueEvent:
        self._check_aligned(other)
        regions = tuple(a.symdiff(b) for a, b in zip(self.regions, other.regions))
        return VagueEvent(f"({self.name} xor {other.name})", self.subjects, regions)

    def complement(self) -> VagueEvent:
        regions = tuple(r.complement() for r in self.regions)
        return VagueEvent(f"(not {self.name})", self.subjects, regions)

    __and__ = intersect
    __or__ = union
    __xor__ = symdiff
    __invert__ = complement


def membership(event: VagueEvent) -> MembershipCurve:
    """Alias for :meth:`VagueEvent.membership`."""
    return event.membership()


def mink_combine(
    op: str, a: VagueEvent, b: VagueEvent | None = None
) -> VagueEvent:
    """Subject-by-subject set operation on events.

    ``op`` is one of ``and``, ``or``, ``not``, ``symdiff`` (alias ``xor``);
    ``b`` is required except for ``not``.
    """
    if op == "not":
        if b is not None:
            raise ValueError("'not' takes a single event")
        return a.complement()
    if b is None:
        raise ValueError(f"{op!r} needs two events")
    if op == "and":
        return a.intersect(b)
    if op == "or":
        return a.union(b)
    if op in ("symdiff", "xor"):
        return a.symdiff(b)
    raise ValueError(f"unknown event operation {op!r}")


class SelectionMatrix:
    """Names x subjects table of judgment regions (both polarities).

    Immutable after construction; build one with :func:`build_matrix`.
    Subjects and names are ordered lexicographically so per-subject
    alignment between rows is deterministic.
    """

    def __init__(
        self,
        universe: Universe,
        subjects: Sequence[str],
        names: Sequence[str],
        cells: Mapping[tuple[str, str, str], Region],
    ):
        self._universe = universe
        self._subjects = tuple(subjects)
        self._names = tuple(names)
        self._cells = dict(cells)

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def subjects(self) -> tuple[str, ...]:
        return self._subjects

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def region(self, name: str, subject: str, polarity: str = FOR) -> Region:
        if name not in self._names:
            raise UnknownAtom(name)
        if subject not in self._subjects:
            raise KeyError(f"unknown subject {subject!r}")
        empty = Region.empty(self._universe)
        return self._cells.get((name, subject, polarity), empty)

    def event(self, name: str, polarity: str = FOR) -> VagueEvent:
        """The row of ``name`` as a vague event over all subjects."""
        if name not in self._names:
            raise UnknownAtom(name)
        empty = Region.empty(self._universe)
        regions = tuple(
            self._cells.get((name, subject, polarity), empty)
            for subject in self._subjects
        )
        return VagueEvent(name, self._subjects, regions)

    def vague_curve(self, name: str) -> VagueCurve:
        """Pointwise (t, f) curve: fractions of for- and against-subjects.

        The for/against disjointness invariant makes t + f <= 1 hold at
        every point by construction.
        """
        size = len(self._subjects)
        if size == 0:
            raise EmptyPopulation("matrix has no subjects")
        for_event = self.event(name, FOR)
        against_event = self.event(name, AGAINST)
        points = breakpoints(for_event.regions + against_event.regions, self._universe)
        pieces = []
        for k in range(len(points) - 1):
            left = points[k]
            t = sum(1 for r in for_event.regions if r.contains(left))
            f = sum(1 for r in against_event.regions if r.contains(left))
            pieces.append(VagueValue(t / size, f / size))
        return VagueCurve(self._universe, points, tuple(pieces))

    def __repr__(self) -> str:
        return (
            f"SelectionMatrix(universe={self._universe}, "
            f"subjects={len(self._subjects)}, names={len(self._names)})"
        )


def build_matrix(
    judgments: Iterable[Judgment],
    universe: Universe,
    subjects: Sequence[str] = (),
    names: Sequence[str] = (),
) -> SelectionMatrix:
    """Collect judgments into a selection matrix.

    Repeated judgments by one subject for one name and polarity are unioned.
    ``subjects``/``names`` may declare identifiers beyond those appearing in
    the judgments; their cells become explicit empty regions.  Overlapping
    for/against regions raise :class:`ContradictoryJudgment`.
    """
    subject_set = {s for s in subjects if s}
    name_set = {n for n in names if n}
    cells: dict[tuple[str, str, str], Region] = {}
    for judgment in judgments:
        if judgment.region.universe != universe:
            raise UniverseMismatch(
                f"judgment ({judgment.subject!r}, {judgment.name!r}) built over "
                f"{judgment.region.universe}, expected {universe}"
            )
        subject_set.add(judgment.subject)
        name_set.add(judgment.name)
        key = (judgment.name, judgment.subject, judgment.polarity)
        held = cells.get(key)
        cells[key] = judgment.region if held is None else held.union(judgment.region)

    ordered_subjects = tuple(sorted(subject_set))
    ordered_names = tuple(sorted(name_set))
    empty = Region.empty(universe)
    for name in ordered_names:
        for subject in ordered_subjects:
            for_region = cells.setdefault((name, subject, FOR), empty)
            against_region = cells.get((name, subject, AGAINST), empty)
            overlap = for_region.intersect(against_region)
            if not overlap.is_empty:
                raise ContradictoryJudgment(subject, name, overlap)
    return SelectionMatrix(universe, ordered_subjects, ordered_names, cells)


def derive_vague_curve(matrix: SelectionMatrix, name: str) -> VagueCurve:
    """Alias for :meth:`SelectionMatrix.vague_curve`."""
    return matrix.vague_curve(name)
