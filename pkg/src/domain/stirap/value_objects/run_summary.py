"""Scalar figures of merit."""

import math
from dataclasses import asdict, dataclass
from typing import Any, Dict

from src.domain.shared.exceptions import InvariantViolation

PROBABILITY_SLACK = 1e-9


def _check_probability(name: str, value: float) -> None:
    if not (math.isfinite(value) and -PROBABILITY_SLACK <= value <= 1 + PROBABILITY_SLACK):
        raise InvariantViolation(f"{name} must be a probability, got {value}")


@dataclass(frozen=True)
class PulseArea:
    radians: float

    @property
    def over_pi(self) -> float:
        return self.radians / math.pi


@dataclass(frozen=True)
class OmegaMax:
    """Peak modified amplitude on a grid, next to two closed-form evaluations.

    ``at_center`` is the amplitude at ``t = 0`` (prefactor ``pi/(4 tau)``);
    ``closed_form_peak`` is the published expression with prefactor ``pi/tau``.
    """

    numeric_max: float
    t_argmax: float
    at_center: float
    closed_form_peak: float


@dataclass(frozen=True)
class RunSummary:
    """Figures of merit of one run."""

    area_over_pi: float
    t_omega_max: float
    p2_bar: float
    epsilon: float
    p3_final: float
    fidelity_sq: float

    def __post_init__(self):
        _check_probability("p3_final", self.p3_final)
        _check_probability("fidelity_sq", self.fidelity_sq)
        _check_probability("p2_bar", self.p2_bar)
        if not self.area_over_pi > 0:
            raise InvariantViolation(f"area_over_pi must be positive, got {self.area_over_pi}")
        if self.fidelity_sq > self.p3_final + PROBABILITY_SLACK:
            raise InvariantViolation("fidelity_sq cannot exceed p3_final")

    @property
    def deviation(self) -> float:
        return 1.0 - self.p3_final

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["deviation"] = self.deviation
        return data
