"""Test helpers and utilities."""

import csv
import io
from pathlib import Path
from typing import Dict, List, Union

TextSource = Union[str, Path]


def _text(source: TextSource) -> str:
    if isinstance(source, Path):
        return source.read_text(encoding="utf-8")
    return source


def read_summary(source: TextSource) -> Dict[str, str]:
    """Parse ``key: value`` summary text (or a summary file) into raw strings."""
    values: Dict[str, str] = {}
    for line in _text(source).splitlines():
        key, _, value = line.partition(": ")
        values[key] = value
    return values


def read_csv(source: TextSource) -> List[Dict[str, str]]:
    """Rows of a result CSV as dicts keyed by the header."""
    return list(csv.DictReader(io.StringIO(_text(source))))


def summary_float(source: TextSource, key: str) -> float:
    """One numeric summary value."""
    return float(read_summary(source)[key])


def list_files(directory: Path) -> List[str]:
    """Sorted file names in ``directory``."""
    return sorted(p.name for p in directory.iterdir() if p.is_file())
