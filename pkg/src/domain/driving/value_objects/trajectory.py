"""Propagation results and dissipation parameters."""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.domain.shared.exceptions import ConvergenceWarning, InvariantViolation

POPULATION_SLACK = 1e-9
SUM_TOLERANCE = 1e-6

UNITARY = "unitary"
LINDBLAD = "lindblad"


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Recorded output of one propagation.

    ``populations`` has one row per recorded time and one column per bare
    level. ``states`` holds the recorded state vectors (unitary runs) or
    density matrices (Lindblad runs). ``norm_drift`` is ``max|‖psi‖ - 1|`` or
    ``max|tr rho - 1|`` over every integration step, not only recorded ones.
    """

    times: np.ndarray
    populations: np.ndarray
    states: np.ndarray
    final_state: np.ndarray
    norm_drift: float
    n_steps: int
    kind: str = UNITARY
    convergence_warning: Optional[ConvergenceWarning] = None
    min_eigenvalue: Optional[float] = None
    tracking_fidelity: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.kind not in (UNITARY, LINDBLAD):
            raise InvariantViolation(f"Unknown trajectory kind '{self.kind}'")
        if self.populations.ndim != 2 or self.populations.shape[0] != self.times.size:
            raise InvariantViolation(
                f"Populations {self.populations.shape} do not match {self.times.size} recorded times"
            )
        if np.any(self.populations < -POPULATION_SLACK) or np.any(self.populations > 1 + POPULATION_SLACK):
            raise InvariantViolation("Populations left [0, 1]")
        worst_sum = float(np.max(np.abs(self.populations.sum(axis=1) - 1.0)))
        if worst_sum > SUM_TOLERANCE:
            raise InvariantViolation(f"Populations do not sum to one (deviation {worst_sum:.3e})")

    @property
    def dim(self) -> int:
        return self.populations.shape[1]

    @property
    def final_populations(self) -> np.ndarray:
        return self.populations[-1]

    @property
    def p3_final(self) -> float:
        """Population of the target level ``|3>`` at the end of the window."""
        return float(self.populations[-1, 2])

    @property
    def fidelity_sq(self) -> float:
        """Square of the final target population."""
        return self.p3_final ** 2

    @property
    def converged(self) -> bool:
        return self.convergence_warning is None


@dataclass(frozen=True)
class LindbladParams:
    """Spontaneous-emission rates from the excited level ``|2>`` to ``|1>`` and ``|3>``."""

    gamma1: float = 0.0
    gamma3: float = 0.0

    def __post_init__(self):
        for name in ("gamma1", "gamma3"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise InvariantViolation(f"{name} must be a non-negative rate, got {value}")

    @property
    def is_closed(self) -> bool:
        return self.gamma1 == 0 and self.gamma3 == 0

    def collapse_operators(self, dim: int = 3) -> List[Tuple[float, np.ndarray]]:
        """``(rate, S_n^-)`` pairs with ``S_n^- = |n><2|``, skipping zero rates."""
        operators = []
        for rate, target in ((self.gamma1, 0), (self.gamma3, 2)):
            if rate == 0:
                continue
            lowering = np.zeros((dim, dim), dtype=complex)
            lowering[target, 1] = 1.0
            operators.append((rate, lowering))
        return operators

    @classmethod
    def from_ratios(cls, omega_max: float, ratio1: float, ratio3: float) -> "LindbladParams":
        """Rates given in units of the peak modified amplitude."""
        return cls(gamma1=ratio1 * omega_max, gamma3=ratio3 * omega_max)
