"""Delimited-text ingestion and emission of feature matrices, plus report serialization."""

from __future__ import annotations

import csv
import logging
import math
from pathlib import Path

import numpy as np

from autonorm.core.exceptions import DataIOError, ParseError
from autonorm.models import (
    ConfigEcho,
    FeatureMatrix,
    FeatureReport,
    MatrixFormat,
    NaPolicy,
    Orientation,
    TransformReport,
)

logger = logging.getLogger(__name__)

_TAB_SUFFIXES = {".tsv", ".tab"}


def resolve_delimiter(path: Path, options: MatrixFormat) -> str:
    if options.delimiter is not None:
        return options.delimiter
    return "\t" if path.suffix.lower() in _TAB_SUFFIXES else ","


def _parse_cell(text: str, policy: NaPolicy, path: Path, line: int, column: int) -> float:
    raw = text.strip()
    try:
        value = float(raw)
    except ValueError:
        value = math.nan
    if math.isfinite(value):
        return value
    if policy == NaPolicy.DROP:
        return math.nan
    raise ParseError(f"{path}: non-numeric cell {raw!r} at line {line}, column {column}.")


def _read_rows(path: Path, delimiter: str) -> list[tuple[int, list[str]]]:
    try:
        with path.open("r", encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle, delimiter=delimiter)
            rows = [(reader.line_num, row) for row in reader if any(cell.strip() for cell in row)]
    except FileNotFoundError as exc:
        raise DataIOError(f"Input file not found: {path}") from exc
    except (OSError, UnicodeDecodeError, csv.Error) as exc:
        raise DataIOError(f"Cannot read matrix file '{path}': {exc}") from exc
    return rows


def read_matrix(path: str | Path, options: MatrixFormat | None = None) -> FeatureMatrix:
    path = Path(path)
    options = options or MatrixFormat()
    delimiter = resolve_delimiter(path, options)
    rows = _read_rows(path, delimiter)
    if not rows:
        raise ParseError(f"{path}: table is empty.")

    width = len(rows[0][1])
    for line, row in rows:
        if len(row) != width:
            raise ParseError(f"{path}: ragged row at line {line} has {len(row)} cells, expected {width}.")

    by_columns = options.orientation == Orientation.FEATURES_AS_COLUMNS
    names: list[str] | None = None
    body = rows
    first_column = 0
    if options.header:
        header = rows[0][1]
        body = rows[1:]
        if by_columns:
            names = list(header)
        elif not header[0].strip():
            # Blank corner cell: the first column holds feature names.
            names = [row[0] for _, row in body]
            first_column = 1

    if not body or width <= first_column:
        raise ParseError(f"{path}: table has no numeric cells.")

    grid = np.array(
        [
            [
                _parse_cell(cell, options.na_policy, path, line, column + 1)
                for column, cell in enumerate(row[first_column:], start=first_column)
            ]
            for line, row in body
        ],
        dtype=np.float64,
    )
    feature_rows = grid.T if by_columns else grid
    if names is None:
        names = [f"f{index}" for index in range(feature_rows.shape[0])]

    matrix = FeatureMatrix.from_rows(names, list(feature_rows), orientation=options.orientation)
    logger.info(
        "matrix.read path=%s features=%d objects=%d orientation=%s",
        path,
        len(matrix.features),
        matrix.n_objects,
        options.orientation.value,
    )
    return matrix


def _format_cell(value: float) -> str:
    # repr gives the shortest string that round-trips to the same double.
    return "" if math.isnan(value) else repr(float(value))


def write_matrix(m: FeatureMatrix, path: str | Path, options: MatrixFormat | None = None) -> None:
    path = Path(path)
    options = options or MatrixFormat(orientation=m.orientation)
    delimiter = resolve_delimiter(path, options)

    if options.orientation == Orientation.FEATURES_AS_COLUMNS:
        lines: list[list[str]] = [m.names] if options.header else []
        values = m.as_array()
        lines.extend([_format_cell(value) for value in row] for row in values.T)
    else:
        lines = [[""] + [str(index) for index in range(m.n_objects)]] if options.header else []
        lines.extend(
            ([feature.name] if options.header else []) + [_format_cell(value) for value in feature.values]
            for feature in m.features
        )

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, delimiter=delimiter, lineterminator="\n")
            writer.writerows(lines)
    except OSError as exc:
        raise DataIOError(f"Cannot write matrix file '{path}': {exc}") from exc
    logger.info("matrix.write path=%s features=%d objects=%d", path, len(m.features), m.n_objects)


def write_report(reports: list[FeatureReport], path: str | Path, config: ConfigEcho) -> None:
    path = Path(path)
    document = TransformReport(config=config, features=reports)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise DataIOError(f"Cannot write report file '{path}': {exc}") from exc
    logger.info("report.write path=%s features=%d", path, len(reports))
