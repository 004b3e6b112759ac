"""Team season records and road multipliers.

A road multiplier is road winning percentage divided by home winning
percentage. Ratios are formed exactly and rounded once.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable

__all__ = [
    "R_PAPER",
    "TeamRecord",
    "RecordError",
    "road_multiplier",
    "road_multiplier_exact",
    "average_road_multiplier",
    "load_records",
    "bundled_path",
    "CSV_FIELDS",
]

# Mean road multiplier of the 96 wildcard-era (1995-2006) playoff teams.
R_PAPER = 0.894762228

CSV_FIELDS = ("team", "season", "home_wins", "home_losses", "road_wins", "road_losses")


class RecordError(ValueError):
    """Invalid record; ``row`` and ``field`` locate the problem when known."""

    def __init__(self, message: str, row: int | None = None, field: str | None = None):
        self.row = row
        self.field = field
        where = []
        if row is not None:
            where.append(f"row {row}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


@dataclass(frozen=True)
class TeamRecord:
    team: str
    season: int
    home_wins: int
    home_losses: int
    road_wins: int
    road_losses: int

    def __post_init__(self):
        for name in CSV_FIELDS[2:]:
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise RecordError(f"must be a nonnegative integer, got {v!r}", field=name)
        if self.home_wins + self.home_losses == 0:
            raise RecordError("no home games played", field="home_wins")
        if self.road_wins + self.road_losses == 0:
            raise RecordError("no road games played", field="road_wins")

    @property
    def label(self) -> str:
        return f"{self.season} {self.team}"

    @property
    def home_record(self) -> str:
        return f"{self.home_wins}-{self.home_losses}"

    @property
    def road_record(self) -> str:
        return f"{self.road_wins}-{self.road_losses}"


def road_multiplier_exact(rec: TeamRecord) -> Fraction:
    if rec.home_wins == 0:
        raise ZeroDivisionError(f"{rec.label}: home winning percentage is zero")
    road = Fraction(rec.road_wins, rec.road_wins + rec.road_losses)
    home = Fraction(rec.home_wins, rec.home_wins + rec.home_losses)
    return road / home


def road_multiplier(rec: TeamRecord) -> float:
    return float(road_multiplier_exact(rec))


def average_road_multiplier(records: Iterable[TeamRecord]) -> float:
    """Plain mean of per-team multipliers, accumulated exactly."""
    records = list(records)
    if not records:
        raise ValueError("cannot average an empty list of records")
    total = sum((road_multiplier_exact(r) for r in records), Fraction(0))
    return float(total / len(records))


def _parse_int(raw: str, row: int, name: str) -> int:
    try:
        return int(raw.strip())
    except (ValueError, AttributeError):
        raise RecordError(f"not an integer: {raw!r}", row=row, field=name) from None


def load_records(path: str | Path) -> list[TeamRecord]:
    """Read a ``team,season,home_wins,home_losses,road_wins,road_losses`` CSV.

    Row numbers in errors count the header as row 1.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise RecordError("missing header", row=1)
        missing = [f for f in CSV_FIELDS if f not in reader.fieldnames]
        if missing:
            raise RecordError(f"header lacks {', '.join(missing)}", row=1)
        out = []
        for rownum, row in enumerate(reader, start=2):
            if None in row or any(row[f] is None for f in CSV_FIELDS):
                raise RecordError("wrong number of columns", row=rownum)
            team = row["team"].strip()
            if not team:
                raise RecordError("empty team name", row=rownum, field="team")
            values = {f: _parse_int(row[f], rownum, f) for f in CSV_FIELDS[1:]}
            try:
                out.append(TeamRecord(team=team, **values))
            except RecordError as exc:
                raise RecordError(str(exc).split(": ", 1)[-1], row=rownum, field=exc.field) from None
    return out


def bundled_path(name: str) -> Path:
    """Path of a bundled fixture: ``"extremes"`` or ``"champions"``."""
    if name not in ("extremes", "champions"):
        raise KeyError(name)
    return Path(str(resources.files("seriesfair") / "data" / f"{name}.csv"))
