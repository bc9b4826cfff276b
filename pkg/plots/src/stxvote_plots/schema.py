"""Versioned CSV contract for sweep results.

The simulator writes one row per sweep cell with exactly these columns.
This package depends on the file format only, never on the simulator's
internals, so the column list is restated here as the interface contract.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

CSV_COLUMNS = (
    "phy",
    "cfo_hz",
    "power_delta_db",
    "snr_db",
    "beating_class",
    "voting",
    "num_packets",
    "per",
    "pdr",
    "corrections",
    "false_accepts",
    "seed",
)

_FLOAT_COLUMNS = ("cfo_hz", "power_delta_db", "snr_db", "per", "pdr")
_INT_COLUMNS = ("num_packets", "corrections", "false_accepts", "seed")
_VOTING_VALUES = ("on", "off")


class SchemaError(ValueError):
    """CSV does not match the sweep schema; `column` names the offender."""

    def __init__(self, column: str, message: str):
        self.column = column
        super().__init__(f"column '{column}': {message}")


@dataclass(frozen=True)
class SweepRow:
    phy: str
    cfo_hz: float
    power_delta_db: float
    snr_db: float
    beating_class: str
    voting: str
    num_packets: int
    per: float
    pdr: float
    corrections: int
    false_accepts: int
    seed: int


def _parse_row(raw: dict, line: int) -> SweepRow:
    values: dict = {}
    for col in CSV_COLUMNS:
        cell = raw[col]
        if cell is None:
            raise SchemaError(col, f"missing value on line {line}")
        try:
            if col in _FLOAT_COLUMNS:
                values[col] = float(cell)
            elif col in _INT_COLUMNS:
                values[col] = int(cell)
            else:
                values[col] = cell.strip()
        except ValueError:
            raise SchemaError(col, f"unparseable value {cell!r} on line {line}")
    if values["voting"] not in _VOTING_VALUES:
        raise SchemaError("voting", f"expected one of {_VOTING_VALUES}, "
                                    f"got {values['voting']!r} on line {line}")
    for col in ("per", "pdr"):
        if not 0.0 <= values[col] <= 1.0:
            raise SchemaError(col, f"value {values[col]} outside [0, 1] "
                                   f"on line {line}")
    return SweepRow(**values)


def load_rows(path) -> list[SweepRow]:
    """Parse and validate a sweep CSV; raises SchemaError naming the
    offending column on any mismatch."""
    path = Path(path)
    with open(path, newline="") as f:
        reader = csv.DictReader(f)
        header = reader.fieldnames
        if header is None:
            raise SchemaError("<header>", f"{path} is empty")
        for col in CSV_COLUMNS:
            if col not in header:
                raise SchemaError(col, "missing from header")
        for col in header:
            if col not in CSV_COLUMNS:
                raise SchemaError(col, "not part of the sweep schema")
        rows = [_parse_row(raw, line) for line, raw in enumerate(reader, start=2)]
    if not rows:
        raise SchemaError("<data>", f"{path} contains a header but no rows")
    return rows
