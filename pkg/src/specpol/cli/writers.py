"""Byte-stable CSV and JSON output."""

import csv
import json
import math
from typing import Any, Iterable, Sequence, TextIO

import numpy as np


def format_number(value: Any, precision: int) -> str:
    """
    Fixed-point text for a number.

    Integers print as integers; floats use `precision` decimals with negative
    zero folded to zero. Non-finite values print as nan, inf or -inf.
    Strings pass through.
    """
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    x = float(value)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    text = f"{x:.{precision}f}"
    if text.startswith("-") and not text.strip("-0."):
        text = text[1:]
    return text


def format_row(row: Sequence[Any], precision: int) -> list:
    return [format_number(v, precision) for v in row]


def write_csv(rows: Iterable[Sequence[Any]], sink: TextIO, precision: int) -> int:
    """
    Write rows as comma separated fixed-point values, one per LF-terminated line.

    Returns:
        Number of rows written
    """
    writer = csv.writer(sink, lineterminator="\n")
    count = 0
    for row in rows:
        writer.writerow(format_row(row, precision))
        count += 1
    return count


def round_for_json(value: Any, precision: int) -> Any:
    """Recursively round floats to `precision` decimals; complex becomes [re, im]."""
    if isinstance(value, dict):
        return {str(k): round_for_json(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_for_json(v, precision) for v in value]
    if isinstance(value, np.ndarray):
        return [round_for_json(v, precision) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)) or value is None or isinstance(value, str):
        return bool(value) if isinstance(value, np.bool_) else value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [round_for_json(value.real, precision), round_for_json(value.imag, precision)]
    x = float(value)
    if not math.isfinite(x):
        return None
    x = round(x, precision)
    return 0.0 if x == 0 else x


def write_json(document: Any, sink: TextIO, precision: int) -> None:
    """Write a JSON document with rounded floats, sorted keys and a trailing newline."""
    sink.write(json.dumps(round_for_json(document, precision), indent=2, sort_keys=True))
    sink.write("\n")
