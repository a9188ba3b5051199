"""Result containers handed from experiment builders to the repositories."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple


@dataclass(frozen=True)
class Table:
    """A named CSV table."""

    name: str
    header: Tuple[str, ...]
    rows: Sequence[Tuple[Any, ...]]


@dataclass
class ExperimentOutput:
    """Everything one experiment writes: tables plus a single key:value summary."""

    experiment: str
    tables: List[Table] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)


@dataclass
class ExperimentResult:
    """What a handler returns once its files are written."""

    experiment: str
    location: str
    files: List[str]
    summary: Dict[str, Any]
