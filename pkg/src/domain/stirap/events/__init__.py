"""Experiment domain events."""

from dataclasses import dataclass, field
from typing import Tuple

from src.domain.shared.domain_event import DomainEvent


@dataclass
class SimulationCompleted(DomainEvent):
    """Event raised when a single propagation finishes."""

    experiment: str = ""
    mode: str = ""
    p3_final: float = 0.0
    norm_drift: float = 0.0
    n_steps: int = 0
    duration_seconds: float = 0.0

    def __post_init__(self):
        """Initialize aggregate_id from the experiment name."""
        if not self.aggregate_id and self.experiment:
            self.aggregate_id = f"experiment_{self.experiment}"


@dataclass
class PropagationFailed(DomainEvent):
    """Event raised when a propagation stops on a numerical error."""

    experiment: str = ""
    error_type: str = ""
    error_message: str = ""

    def __post_init__(self):
        """Initialize aggregate_id if not set."""
        if not self.aggregate_id and self.experiment:
            self.aggregate_id = f"experiment_{self.experiment}"


@dataclass
class MonteCarloCompleted(DomainEvent):
    """Event raised when a Monte Carlo batch has been aggregated."""

    experiment: str = ""
    n_runs: int = 0
    n_failed: int = 0
    mean_p3: float = 0.0
    min_p3: float = 0.0
    duration_seconds: float = 0.0

    def __post_init__(self):
        """Initialize aggregate_id if not set."""
        if not self.aggregate_id and self.experiment:
            self.aggregate_id = f"experiment_{self.experiment}"


@dataclass
class ExperimentWritten(DomainEvent):
    """Event raised when an experiment's result files are on disk."""

    experiment: str = ""
    location: str = ""
    files: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        """Initialize aggregate_id if not set."""
        if not self.aggregate_id and self.experiment:
            self.aggregate_id = f"experiment_{self.experiment}"


__all__ = [
    "ExperimentWritten",
    "MonteCarloCompleted",
    "PropagationFailed",
    "SimulationCompleted",
]
