"""Judgment dataset files: CSV ingestion and the synthetic example generator.

Wire format: a header row ``subject,name,lo,hi,polarity`` (the ``polarity``
column is optional and defaults to ``for``), then one interval judgment per
row with decimal endpoints.  Lines whose first non-blank character is ``#``
are comments.  A written closed interval [a, b] is ingested as the half-open
[a, b); a row with ``lo == hi`` records an explicit empty judgment.
"""

from __future__ import annotations

import csv
import random
import re
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DatasetError, EmptyPopulation, InvalidInterval, OutOfUniverse
from .eventology import FOR, POLARITIES, Judgment, SelectionMatrix, build_matrix
from .expressions import RESERVED_WORDS
from .regions import Region, Universe

__all__ = [
    "read_judgments",
    "parse_judgments",
    "load_matrix",
    "generate_example",
]

_ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_BASE_COLUMNS = ["subject", "name", "lo", "hi"]


def _split_row(line: str, lineno: int) -> list[str]:
    try:
        row = next(csv.reader([line]))
    except (csv.Error, StopIteration) as exc:
        raise DatasetError(f"unreadable row: {exc}", line=lineno) from None
    return [cell.strip() for cell in row]


def _parse_endpoint(text: str, column: str, lineno: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise DatasetError(f"{column} is not a number: {text!r}", line=lineno) from None
    return value


def parse_judgments(lines: Iterable[str], universe: Universe) -> list[Judgment]:
    """Parse dataset lines into judgments, reporting line numbers on errors."""
    rows = [
        (lineno, line)
        for lineno, line in enumerate(lines, start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise DatasetError("dataset has no header row")

    header_lineno, header_line = rows[0]
    header = [cell.lower() for cell in _split_row(header_line, header_lineno)]
    if header not in (_BASE_COLUMNS, _BASE_COLUMNS + ["polarity"]):
        raise DatasetError(
            f"header must be 'subject,name,lo,hi[,polarity]', got {','.join(header)!r}",
            line=header_lineno,
        )
    width = len(header)

    judgments: list[Judgment] = []
    for lineno, line in rows[1:]:
        cells = _split_row(line, lineno)
        if len(cells) != width:
            raise DatasetError(
                f"expected {width} columns, got {len(cells)}", line=lineno
            )
        subject, name = cells[0], cells[1]
        if not subject:
            raise DatasetError("subject must be non-empty", line=lineno)
        if not _ATOM_RE.match(name):
            raise DatasetError(
                f"name {name!r} is not a valid atom identifier", line=lineno
            )
        if name in RESERVED_WORDS:
            raise DatasetError(
                f"name {name!r} is a reserved expression keyword", line=lineno
            )
        lo = _parse_endpoint(cells[2], "lo", lineno)
        hi = _parse_endpoint(cells[3], "hi", lineno)
        polarity = FOR
        if width == 5 and cells[4]:
            polarity = cells[4].lower()
            if polarity not in POLARITIES:
                raise DatasetError(
                    f"polarity must be one of {POLARITIES}, got {cells[4]!r}",
                    line=lineno,
                )
        try:
            region = Region.from_pairs([(lo, hi)], universe)
        except (InvalidInterval, OutOfUniverse) as exc:
            raise DatasetError(str(exc), line=lineno) from None
        judgments.append(Judgment(subject, name, region, polarity))
    return judgments


def read_judgments(path: str | Path, universe: Universe) -> list[Judgment]:
    text = Path(path).read_text(encoding="utf-8")
    return parse_judgments(text.splitlines(), universe)


def load_matrix(
    path: str | Path,
    universe: Universe,
    subjects: Sequence[str] = (),
    names: Sequence[str] = (),
) -> SelectionMatrix:
    return build_matrix(read_judgments(path, universe), universe, subjects, names)


def generate_example(seed: int, subjects: int = 71) -> str:
    """Deterministic synthetic age survey over [0, 80) with two names.

    Every subject gives one for-interval per name.  Endpoints are integers:
    ``young_man`` draws lo from 12..22 and hi from 26..45; ``young_woman``
    shifts the same subject's interval slightly (lo by -2..2 clamped to
    10..22, hi by -6..2 clamped to 26..45), so the two judgments of one
    subject are strongly correlated.  Every generated interval contains the
    ages 22..25, which keeps both aggregate curves unimodal.  The same seed
    always produces byte-identical output.
    """
    if subjects < 1:
        raise EmptyPopulation(f"need at least one subject, got {subjects}")
    rng = random.Random(seed)
    width = len(str(subjects))
    lines = [
        f"# synthetic age survey: seed={seed} subjects={subjects} universe=[0,80)",
        "subject,name,lo,hi,polarity",
    ]
    for i in range(1, subjects + 1):
        sid = f"s{i:0{width}d}"
        man_lo = rng.randint(12, 22)
        man_hi = rng.randint(26, 45)
        woman_lo = min(max(man_lo + rng.randint(-2, 2), 10), 22)
        woman_hi = min(max(man_hi + rng.randint(-6, 2), 26), 45)
        lines.append(f"{sid},young_man,{man_lo},{man_hi},for")
        lines.append(f"{sid},young_woman,{woman_lo},{woman_hi},for")
    return "\n".join(lines) + "\n"
