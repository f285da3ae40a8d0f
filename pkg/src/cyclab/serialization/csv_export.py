# this_file: src/cyclab/serialization/csv_export.py
"""CSV output with provenance comments."""

import csv
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path
from typing import Any

import numpy as np
from loguru import logger


def format_cell(value: Any) -> str:
    """repr-exact floats, "re,im" for complex values, '.' as decimal separator."""
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, complex):
        return f"{value.real!r},{value.imag!r}"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(
    path: str | Path,
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    comments: Mapping[str, Any] | None = None,
) -> Path:
    """Write rows under ``# key: value`` comment lines and a header row."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with target.open("w", newline="", encoding="utf-8") as handle:
        for key, value in (comments or {}).items():
            handle.write(f"# {key}: {value}\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])
            count += 1
    logger.debug(f"Wrote {count} rows to {target}")
    return target


def read_csv_rows(path: str | Path) -> tuple[list[str], list[list[str]]]:
    """Header and data rows, skipping '#' comment lines."""
    with Path(path).open(newline="", encoding="utf-8") as handle:
        lines = [line for line in handle if not line.startswith("#")]
    reader = csv.reader(lines)
    header = next(reader)
    return header, [row for row in reader if row]
