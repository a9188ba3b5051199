"""Time-dependent Lambda drives usable as Hamiltonian sources for propagation."""

import math
from abc import ABC, abstractmethod

import numpy as np

from src.domain.shared.exceptions import InvariantViolation
from src.domain.stirap.services import pulse_shapes, shortcut
from src.domain.stirap.value_objects.modified_drive import DriveColumns, ModifiedDrive
from src.domain.stirap.value_objects.pulse_params import PulseParams
from src.domain.stirap.value_objects.shortcut_frame import ShortcutFrame


class DriveSchedule(ABC):
    """A drive sampled column-wise; the Hamiltonian follows from the columns."""

    mode: str = "drive"

    def __init__(self, params: PulseParams):
        self.params = params

    @abstractmethod
    def columns(self, times) -> DriveColumns:
        """Drive columns on ``times``."""
        pass

    def hamiltonians(self, times) -> np.ndarray:
        return shortcut.h_tilde_stack(self.columns(np.asarray(times, dtype=float)))

    def hamiltonian(self, t: float) -> np.ndarray:
        return self.hamiltonians(np.array([t]))[0]

    def __call__(self, t: float) -> np.ndarray:
        return self.hamiltonian(t)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.params!r})"


class OriginalDrive(DriveSchedule):
    """Reference Hamiltonian with the sigmoid mixing angle and a fixed ``phi``.

    The envelope is the constant ``omega0_ref`` or the super-Gaussian.
    """

    mode = "original"

    def __init__(self, params: PulseParams, envelope: str = "constant"):
        super().__init__(params)
        self.envelope = envelope
        self._envelope_fn = pulse_shapes.envelope_function(envelope)

    def columns(self, times) -> DriveColumns:
        times = np.asarray(times, dtype=float)
        p = self.params
        omega0 = np.broadcast_to(self._envelope_fn(times, p), times.shape).astype(float)
        theta = pulse_shapes.theta(times, p)
        zeros = np.zeros_like(times)
        return DriveColumns(
            times=times,
            omega_p=omega0 * np.sin(theta),
            omega_s=omega0 * np.cos(theta),
            phase_p=zeros,
            phase_s=zeros,
            delta=omega0 * math.cos(2.0 * p.phi) / math.sin(2.0 * p.phi),
            theta=theta,
            gamma=zeros,
        )


class ShortcutDrive(DriveSchedule):
    """The closed-form transitionless drive."""

    mode = "shortcut"

    def frame(self, t: float) -> ShortcutFrame:
        return shortcut.frame_at(t, self.params)

    def drive(self, t: float) -> ModifiedDrive:
        return shortcut.modified_drive(self.frame(t))

    def columns(self, times) -> DriveColumns:
        return shortcut.drive_columns(times, self.params)

    def hamiltonian(self, t: float) -> np.ndarray:
        return shortcut.h_tilde(self.drive(t))


def build_drive(params: PulseParams, mode: str, envelope: str = "constant") -> DriveSchedule:
    """Drive for a run mode: ``shortcut`` or ``original``."""
    if mode == ShortcutDrive.mode:
        return ShortcutDrive(params)
    if mode == OriginalDrive.mode:
        return OriginalDrive(params, envelope)
    raise InvariantViolation(f"Unknown drive mode '{mode}', expected 'shortcut' or 'original'")
