"""CSV and JSON writers with round-trip float precision.

Outputs carry no timestamps, so identical inputs give byte-identical files.
"""

import csv
import json
import logging
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import IO, Any

import numpy as np

from susy_crystal.figures import Table
from susy_crystal.spectra import SpectrumGrid

logger = logging.getLogger(__name__)

SPECTRUM_COLUMNS = ("p", "t_re", "t_im", "rl_re", "rl_im", "rr_re", "rr_im", "T", "Rl", "Rr")
POTENTIAL_COLUMNS = ("x", "V_re", "V_im")


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


def format_float(value: float) -> str:
    """17 significant digits; enough to round-trip any double."""
    return format(float(value), ".17g")


def provenance_line(provenance: dict[str, Any]) -> str:
    return "# provenance: " + json.dumps(provenance, sort_keys=True)


@contextmanager
def _open(dest: str | Path | IO[str]) -> Iterator[IO[str]]:
    if hasattr(dest, "write"):
        yield dest
        return
    path = Path(dest)
    with open(path, "w", newline="") as f:
        yield f
    logger.info("Wrote %s", path)


def spectrum_records(spectrum: SpectrumGrid) -> list[dict[str, float]]:
    """One mapping per momentum, keyed by SPECTRUM_COLUMNS."""
    records = []
    for row in spectrum.rows:
        values = (
            row.p,
            row.t.real, row.t.imag,
            row.r_left.real, row.r_left.imag,
            row.r_right.real, row.r_right.imag,
            row.T, row.R_left, row.R_right,
        )
        records.append({name: float(v) for name, v in zip(SPECTRUM_COLUMNS, values)})
    return records


def write_spectrum_csv(spectrum: SpectrumGrid, dest: str | Path | IO[str]) -> None:
    with _open(dest) as f:
        f.write(provenance_line(spectrum.provenance) + "\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SPECTRUM_COLUMNS)
        for record in spectrum_records(spectrum):
            writer.writerow(format_float(record[name]) for name in SPECTRUM_COLUMNS)


def write_spectrum_json(spectrum: SpectrumGrid, dest: str | Path | IO[str]) -> None:
    document = {"provenance": spectrum.provenance, "rows": spectrum_records(spectrum)}
    with _open(dest) as f:
        json.dump(document, f, sort_keys=True, indent=2)
        f.write("\n")


def write_spectrum(
    spectrum: SpectrumGrid,
    dest: str | Path | IO[str],
    fmt: OutputFormat = OutputFormat.CSV,
) -> None:
    if fmt is OutputFormat.JSON:
        write_spectrum_json(spectrum, dest)
    else:
        write_spectrum_csv(spectrum, dest)


def write_columns(
    columns: tuple[str, ...], data: np.ndarray, dest: str | Path | IO[str]
) -> None:
    """Header row then one row per line of ``data``."""
    data = np.asarray(data, dtype=float)
    if data.ndim != 2 or data.shape[1] != len(columns):
        raise ValueError(f"data shape {data.shape} does not match columns {columns}")
    with _open(dest) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for row in data:
            writer.writerow(format_float(v) for v in row)


def write_potential_samples(x, values, dest: str | Path | IO[str]) -> None:
    """Potential samples as ``x,V_re,V_im``."""
    v = np.asarray(values, dtype=complex)
    write_columns(POTENTIAL_COLUMNS, np.column_stack([x, v.real, v.imag]), dest)


def write_table(table: Table, dest: str | Path | IO[str]) -> None:
    write_columns(table.columns, table.data, dest)
