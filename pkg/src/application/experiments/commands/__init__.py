"""Experiment application commands."""

from dataclasses import dataclass, field
from typing import Any, Dict

from src.application.experiments.services.simulation import SimulationRequest
from src.domain.stirap.value_objects import NoiseConfig


@dataclass
class SimulateCommand:
    """Command to propagate one configured run and write its trajectory."""

    request: SimulationRequest
    output_dir: str
    config_echo: Dict[str, Any] = field(default_factory=dict)
    jobs: int = 1
    experiment: str = "simulate"


@dataclass
class FigureCommand:
    """Command to regenerate the data behind one figure."""

    number: int
    request: SimulationRequest
    noise: NoiseConfig
    output_dir: str
    n_runs: int = 100
    config_echo: Dict[str, Any] = field(default_factory=dict)
    jobs: int = 1

    @property
    def experiment(self) -> str:
        return f"fig{self.number}"


@dataclass
class NoiseMonteCarloCommand:
    """Command to run the noise Monte Carlo on the shortcut drive."""

    request: SimulationRequest
    noise: NoiseConfig
    output_dir: str
    n_runs: int = 100
    config_echo: Dict[str, Any] = field(default_factory=dict)
    jobs: int = 1
    experiment: str = "noise_mc"
