"""Adiabatic phase value object."""

import math
from dataclasses import dataclass

from src.domain.shared.exceptions import InvariantViolation


@dataclass(frozen=True)
class AdiabaticPhase:
    """Phase accumulated by level ``n``; the geometric part is zero in the parallel gauge."""

    n: int
    value: float
    dynamical: float
    geometric: float = 0.0

    def __post_init__(self):
        if self.n < 0:
            raise InvariantViolation(f"Level index must be non-negative, got {self.n}")
        for name in ("value", "dynamical", "geometric"):
            if not math.isfinite(getattr(self, name)):
                raise InvariantViolation(f"Adiabatic phase {name} must be finite")
