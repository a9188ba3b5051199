"""Text rendering of result tables, summaries and config echoes.

Every number goes through :func:`format_value` so that identical runs give
byte-identical files: ``.15g`` for floats, ``.`` as decimal separator and
LF line endings.
"""

import csv
import io
import math
from typing import Any, Mapping, Sequence

import numpy as np

FLOAT_FORMAT = ".15g"
LINE_END = "\n"


def format_value(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if value == 0:
            return "0"
        return format(value, FLOAT_FORMAT)
    if value is None:
        return ""
    if isinstance(value, (tuple, list)):
        return " ".join(format_value(v) for v in value)
    return str(value)


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """CSV text with a header line; every row must match the header width."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator=LINE_END)
    writer.writerow(list(header))
    for index, row in enumerate(rows):
        if len(row) != len(header):
            raise ValueError(f"Row {index} has {len(row)} fields, header has {len(header)}")
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def render_summary(values: Mapping[str, Any]) -> str:
    """``key: value`` lines in insertion order."""
    return "".join(f"{key}: {format_value(value)}{LINE_END}" for key, value in values.items())


def render_config_echo(config: Mapping[str, Any]) -> str:
    """``key = value`` lines, sorted by key, readable by the config loader."""
    return "".join(f"{key} = {format_value(config[key])}{LINE_END}" for key in sorted(config))
