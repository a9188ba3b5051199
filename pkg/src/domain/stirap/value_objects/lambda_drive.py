"""Instantaneous drive of the three-level Lambda system."""

import math
from dataclasses import dataclass

from src.domain.shared.exceptions import InvariantViolation


@dataclass(frozen=True)
class LambdaDrive:
    """Pump and Stokes Rabi frequencies and one-photon detuning at one instant."""

    omega_p: float
    omega_s: float
    delta: float

    def __post_init__(self):
        for name in ("omega_p", "omega_s", "delta"):
            if not math.isfinite(getattr(self, name)):
                raise InvariantViolation(f"{name} must be finite")
        if self.omega_p < 0 or self.omega_s < 0:
            raise InvariantViolation(
                f"Rabi frequencies must be non-negative, got ({self.omega_p}, {self.omega_s})"
            )

    @property
    def omega0(self) -> float:
        return math.hypot(self.omega_p, self.omega_s)

    def mixing_angles(self) -> "MixingAngles":
        omega0 = self.omega0
        return MixingAngles(
            theta=math.atan2(self.omega_p, self.omega_s),
            phi=0.5 * math.atan2(omega0, self.delta),
            xi0=math.hypot(omega0, self.delta),
        )


@dataclass(frozen=True)
class MixingAngles:
    """Mixing angles: tan(theta) = omega_p/omega_s, tan(2 phi) = omega0/delta."""

    theta: float
    phi: float
    xi0: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.theta, self.phi, self.xi0)):
            raise InvariantViolation("Mixing angles must be finite")
        if self.xi0 < 0:
            raise InvariantViolation(f"xi0 must be non-negative, got {self.xi0}")

    @property
    def omega0(self) -> float:
        return self.xi0 * math.sin(2.0 * self.phi)

    @property
    def delta(self) -> float:
        return self.xi0 * math.cos(2.0 * self.phi)

    def to_drive(self) -> LambdaDrive:
        omega0 = self.omega0
        return LambdaDrive(
            omega_p=omega0 * math.sin(self.theta),
            omega_s=omega0 * math.cos(self.theta),
            delta=self.delta,
        )
