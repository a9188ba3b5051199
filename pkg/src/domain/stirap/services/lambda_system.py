"""The off-resonant three-level Lambda system in the rotating-wave frame.

Levels are ordered ``|1>, |2>, |3>`` with ``|2>`` the excited state. All
Hamiltonians carry the overall factor 1/2 (hbar = 1).
"""

import math

import numpy as np

from src.domain.driving.value_objects import BasisSample, MovingBasis
from src.domain.stirap.services import pulse_shapes
from src.domain.stirap.value_objects.lambda_drive import LambdaDrive, MixingAngles
from src.domain.stirap.value_objects.pulse_params import PulseParams

SPECTRUM_LABELS = ("0", "+", "-")


def h0(d: LambdaDrive) -> np.ndarray:
    """``(1/2) [[0, Op, 0], [Op, 2 Delta, Os], [0, Os, 0]]``."""
    return 0.5 * np.array(
        [
            [0.0, d.omega_p, 0.0],
            [d.omega_p, 2.0 * d.delta, d.omega_s],
            [0.0, d.omega_s, 0.0],
        ],
        dtype=complex,
    )


def spectrum_h0(a: MixingAngles) -> BasisSample:
    """Analytic eigenpairs of :func:`h0`, ordered dark, upper, lower.

    ``E0 = 0``, ``E+ = Xi0 cos^2(phi)``, ``E- = -Xi0 sin^2(phi)``.
    """
    s, c = math.sin(a.theta), math.cos(a.theta)
    sp, cp = math.sin(a.phi), math.cos(a.phi)
    dark = np.array([c, 0.0, -s], dtype=complex)
    upper = np.array([s * sp, cp, c * sp], dtype=complex)
    lower = np.array([s * cp, -sp, c * cp], dtype=complex)
    energies = np.array([0.0, a.xi0 * cp ** 2, -a.xi0 * sp ** 2])
    return BasisSample(
        energies=energies,
        vectors=np.column_stack([dark, upper, lower]),
        labels=SPECTRUM_LABELS,
    )


def h_cd(theta_dot: float, phi_dot: float, theta: float) -> np.ndarray:
    """Counterdiabatic term of :func:`h0`; purely imaginary and antisymmetric."""
    s, c = math.sin(theta), math.cos(theta)
    return 1j * np.array(
        [
            [0.0, phi_dot * s, theta_dot],
            [-phi_dot * s, 0.0, -phi_dot * c],
            [-theta_dot, phi_dot * c, 0.0],
        ],
        dtype=complex,
    )


def adiabaticity_ratio(t, p: PulseParams, omega0: float):
    """``Xi0 sin^2(phi) / (theta_dot cos(phi))`` with ``Xi0 = Omega0 / sin(2 phi)``."""
    xi0 = omega0 / math.sin(2.0 * p.phi)
    return xi0 * math.sin(p.phi) ** 2 / (pulse_shapes.theta_dot(t, p) * math.cos(p.phi))


def min_adiabaticity_ratio(p: PulseParams, omega0: float, n_steps: int = 4096) -> float:
    times = np.linspace(p.t_start, p.t_end, n_steps + 1)
    return float(np.min(adiabaticity_ratio(times, p, omega0)))


def drive_at(t: float, p: PulseParams, omega0: float) -> LambdaDrive:
    """Reference drive with constant ``phi``: ``Delta = Omega0 / tan(2 phi)``."""
    th = float(pulse_shapes.theta(t, p))
    return LambdaDrive(
        omega_p=omega0 * math.sin(th),
        omega_s=omega0 * math.cos(th),
        delta=omega0 * math.cos(2.0 * p.phi) / math.sin(2.0 * p.phi),
    )


def adiabatic_basis(p: PulseParams, envelope: str = "constant") -> MovingBasis:
    """Instantaneous eigenbasis of the reference Hamiltonian along the pulse."""
    envelope_fn = pulse_shapes.envelope_function(envelope)

    def sample(t: float) -> BasisSample:
        omega0 = float(envelope_fn(t, p))
        return spectrum_h0(drive_at(t, p, omega0).mixing_angles())

    return MovingBasis(sample, label=f"adiabatic[{envelope}]", time_scale=p.T)

