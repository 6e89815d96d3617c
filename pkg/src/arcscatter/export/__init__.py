"""CSV and JSON export of densities, fields, spectra and run summaries."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np

from arcscatter.models.core import CosineSeries, NodalGrid
from arcscatter.spectral.cosine import from_coefficients

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from arcscatter.models.core import OperatorMatrix
    from arcscatter.models.results import SpectrumPoint

CSV_HEADER = "# arcscatter-csv v1"


@dataclass
class CsvOptions:
    """Formatting options for CSV output.

    Attributes:
        digits: Significant digits for floating-point values.
        header: Comment line written before the column names.
    """

    digits: int = 17
    header: str = CSV_HEADER


def format_value(value: Any, digits: int = 17) -> str:
    """Format a cell: floats with fixed significant digits, everything else via str."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{digits}g}"
    return "" if value is None else str(value)


def write_csv(
    output_path: Path | str,
    columns: Sequence[str],
    rows: Iterable[Sequence[Any]],
    *,
    options: CsvOptions | None = None,
) -> Path:
    """Write rows under a versioned header.

    Args:
        output_path: Destination file.
        columns: Column names.
        rows: Row values, each as long as ``columns``.
        options: Formatting options.

    Returns:
        Path to the created file.
    """
    options = options or CsvOptions()
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with output_path.open("w", newline="", encoding="utf-8") as handle:
        handle.write(options.header + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            if len(row) != len(columns):
                raise ValueError(f"Row has {len(row)} values for {len(columns)} columns")
            writer.writerow([format_value(value, options.digits) for value in row])
    return output_path


def _complex_rows(labels: np.ndarray, values: np.ndarray) -> list[tuple[Any, ...]]:
    values = np.asarray(values, dtype=complex)
    return [(label, value.real, value.imag) for label, value in zip(labels, values)]


def write_series_csv(series: CosineSeries, output_path: Path | str) -> Path:
    """Cosine coefficients as (m, re, im)."""
    return write_csv(output_path, ("m", "re", "im"), _complex_rows(np.arange(series.size), series.coefficients))


def write_nodal_csv(series: CosineSeries, output_path: Path | str) -> Path:
    """Nodal values on the interior grid as (theta, re, im)."""
    grid = NodalGrid(series.size)
    return write_csv(output_path, ("theta", "re", "im"), _complex_rows(grid.nodes, from_coefficients(series, grid)))


def write_field_csv(points: np.ndarray, values: np.ndarray, output_path: Path | str) -> Path:
    """Field samples as (x, y, re, im)."""
    points = np.asarray(points, dtype=float)
    values = np.asarray(values, dtype=complex)
    rows = [(p[0], p[1], v.real, v.imag) for p, v in zip(points, values)]
    return write_csv(output_path, ("x", "y", "re", "im"), rows)


def write_far_field_csv(angles: np.ndarray, values: np.ndarray, output_path: Path | str) -> Path:
    """Far-field pattern as (angle, re, im)."""
    return write_csv(output_path, ("angle", "re", "im"), _complex_rows(np.asarray(angles, dtype=float), values))


def write_residuals_csv(residuals: Sequence[float], output_path: Path | str) -> Path:
    """Iteration log as (iter, residual), counting from 1."""
    return write_csv(output_path, ("iter", "residual"), [(i + 1, float(r)) for i, r in enumerate(residuals)])


def write_spectrum_csv(eigenvalues: np.ndarray, output_path: Path | str) -> Path:
    """Eigenvalues as (re, im)."""
    values = np.asarray(eigenvalues, dtype=complex)
    return write_csv(output_path, ("re", "im"), [(v.real, v.imag) for v in values])


def write_spectrum_points_csv(points: Sequence[SpectrumPoint], output_path: Path | str) -> Path:
    """Classified eigenvalues as (re, im, membership, s)."""
    rows = [(p.value.real, p.value.imag, p.membership.value, float(p.s)) for p in points]
    return write_csv(output_path, ("re", "im", "membership", "s"), rows)


def write_matrix_csv(matrix: OperatorMatrix, output_path: Path | str) -> Path:
    """Dense operator entries as (row, col, re, im), row-major."""
    entries = matrix.entries
    rows = [
        (i, j, entries[i, j].real, entries[i, j].imag)
        for i in range(entries.shape[0])
        for j in range(entries.shape[1])
    ]
    return write_csv(output_path, ("row", "col", "re", "im"), rows)


def write_summary_json(summary: dict[str, Any], output_path: Path | str) -> Path:
    """Write a run summary as sorted, indented JSON."""
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(json.dumps(summary, indent=2, sort_keys=True, default=_json_default) + "\n", encoding="utf-8")
    return output_path


def _json_default(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


__all__ = [
    "CSV_HEADER",
    "CsvOptions",
    "format_value",
    "write_csv",
    "write_far_field_csv",
    "write_field_csv",
    "write_matrix_csv",
    "write_nodal_csv",
    "write_residuals_csv",
    "write_series_csv",
    "write_spectrum_csv",
    "write_spectrum_points_csv",
    "write_summary_json",
]
