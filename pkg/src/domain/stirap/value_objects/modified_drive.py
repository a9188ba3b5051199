"""Synthesised drive of the transitionless Lambda Hamiltonian."""

import math
from dataclasses import dataclass

import numpy as np

from src.domain.shared.exceptions import InvariantViolation

AMPLITUDE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ModifiedDrive:
    """Pump/Stokes amplitudes and phases, detuning, and the polar form (omega0_t, theta_t).

    ``phase_p_undefined`` / ``phase_s_undefined`` flag instants where both
    arguments of the phase arctangent vanish; the phase is then reported as 0.
    """

    omega_p_t: float
    omega_s_t: float
    phase_p: float
    phase_s: float
    delta_t: float
    omega0_t: float
    theta_t: float
    phase_p_undefined: bool = False
    phase_s_undefined: bool = False

    def __post_init__(self):
        values = (self.omega_p_t, self.omega_s_t, self.phase_p, self.phase_s,
                  self.delta_t, self.omega0_t, self.theta_t)
        if not all(math.isfinite(v) for v in values):
            raise InvariantViolation("Modified drive has non-finite entries")
        if self.omega_p_t < 0 or self.omega_s_t < 0 or self.omega0_t < 0:
            raise InvariantViolation("Modified amplitudes must be non-negative")
        scale = max(self.omega0_t, 1e-300)
        norm = math.hypot(self.omega_p_t, self.omega_s_t)
        if abs(norm - self.omega0_t) > AMPLITUDE_TOLERANCE * scale:
            raise InvariantViolation(
                f"omega_p^2 + omega_s^2 != omega0^2 ({norm!r} vs {self.omega0_t!r})"
            )
        if abs(self.omega0_t * math.sin(self.theta_t) - self.omega_p_t) > AMPLITUDE_TOLERANCE * scale:
            raise InvariantViolation("omega_p_t != omega0_t sin(theta_t)")


@dataclass(frozen=True, eq=False)
class DriveColumns:
    """A drive sampled on a time grid, column by column.

    ``theta`` and ``gamma`` are the underlying pulse angles (``gamma`` is zero
    for the reference drive); the polar form of the amplitudes is derived.
    """

    times: np.ndarray
    omega_p: np.ndarray
    omega_s: np.ndarray
    phase_p: np.ndarray
    phase_s: np.ndarray
    delta: np.ndarray
    theta: np.ndarray
    gamma: np.ndarray

    def __post_init__(self):
        size = np.asarray(self.times).size
        for name in ("times", "omega_p", "omega_s", "phase_p", "phase_s", "delta", "theta", "gamma"):
            column = np.asarray(getattr(self, name), dtype=float)
            if column.shape != (size,):
                raise InvariantViolation(f"Column '{name}' has shape {column.shape}, expected ({size},)")
            object.__setattr__(self, name, column)

    def __len__(self) -> int:
        return self.times.size

    @property
    def omega0(self) -> np.ndarray:
        return np.hypot(self.omega_p, self.omega_s)

    @property
    def theta_tilde(self) -> np.ndarray:
        return np.arctan2(self.omega_p, self.omega_s)

    def at(self, k: int) -> ModifiedDrive:
        return ModifiedDrive(
            omega_p_t=float(self.omega_p[k]),
            omega_s_t=float(self.omega_s[k]),
            phase_p=float(self.phase_p[k]),
            phase_s=float(self.phase_s[k]),
            delta_t=float(self.delta[k]),
            omega0_t=float(self.omega0[k]),
            theta_t=float(self.theta_tilde[k]),
        )


@dataclass(frozen=True)
class SmallDetuningApprox:
    """Near-resonance approximation of (omega0, theta) next to the exact values."""

    omega0_approx: float
    theta_approx: float
    omega0_exact: float
    theta_exact: float

    @property
    def omega0_relative_error(self) -> float:
        return abs(self.omega0_approx - self.omega0_exact) / self.omega0_exact

    @property
    def theta_error(self) -> float:
        return abs(self.theta_approx - self.theta_exact)
