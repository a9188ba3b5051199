"""Counterdiabatic terms and adiabatic phases for small time-dependent Hamiltonians."""

import logging
from typing import Callable, Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid

from src.domain.driving.services.transitionless_framework import STEP_FRACTION, richardson_check
from src.domain.driving.value_objects import AdiabaticPhase
from src.domain.numerics import hermitian_eig
from src.domain.shared.exceptions import InvariantViolation, NearDegeneracy

logger = logging.getLogger(__name__)

TimeDependentHamiltonian = Callable[[float], np.ndarray]

_SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
_SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _check_gap(values: np.ndarray, hamiltonian: np.ndarray, t: float, gap_tol: Optional[float]) -> None:
    tolerance = gap_tol if gap_tol is not None else 1e-8 * max(float(np.linalg.norm(hamiltonian, 2)), 1e-300)
    if values.size < 2:
        return
    gap = float(np.min(np.diff(values)))
    if gap < tolerance:
        raise NearDegeneracy(
            f"Spectral gap {gap:.3e} below tolerance {tolerance:.3e} at t={t:.6g}",
            t=t,
            gap=gap,
        )


def _cd_from_derivative(vectors: np.ndarray, values: np.ndarray, h_dot: np.ndarray) -> np.ndarray:
    # <m|Hdot|n> / (E_n - E_m) off the diagonal, rotated back to the bare basis.
    in_eigenbasis = vectors.conj().T @ h_dot @ vectors
    denominators = values[np.newaxis, :] - values[:, np.newaxis]
    np.fill_diagonal(denominators, 1.0)
    coupling = 1j * in_eigenbasis / denominators
    np.fill_diagonal(coupling, 0.0)
    return vectors @ coupling @ vectors.conj().T


def cd_hamiltonian(
    h_fn: TimeDependentHamiltonian,
    t: float,
    h: Optional[float] = None,
    gap_tol: Optional[float] = None,
    richardson: bool = True,
    time_scale: float = 1.0,
) -> np.ndarray:
    """``H_cd = i sum_{m != n} P_m Hdot P_n / (E_n - E_m)``.

    Projectors come from the instantaneous spectrum, ``Hdot`` from a central
    difference of step ``h`` (default ``1e-6 * time_scale``), checked against
    ``2h`` when ``richardson`` is set. The default gap tolerance is ``1e-8 * ‖H‖``.

    Raises:
        NearDegeneracy: if two instantaneous eigenvalues are closer than ``gap_tol``.
    """
    if h is None:
        h = STEP_FRACTION * time_scale
    if h <= 0:
        raise InvariantViolation(f"Finite-difference step must be positive, got {h}")
    hamiltonian = np.asarray(h_fn(t), dtype=complex)
    eig = hermitian_eig(hamiltonian)
    _check_gap(eig.values, hamiltonian, t, gap_tol)

    h_dot = (np.asarray(h_fn(t + h)) - np.asarray(h_fn(t - h))) / (2.0 * h)
    result = _cd_from_derivative(eig.vectors, eig.values, h_dot)

    if richardson:
        h_dot_coarse = (np.asarray(h_fn(t + 2 * h)) - np.asarray(h_fn(t - 2 * h))) / (4.0 * h)
        coarse = _cd_from_derivative(eig.vectors, eig.values, h_dot_coarse)
        richardson_check(float(np.max(np.abs(coarse - result))), "CD term", t)
    return result


def transitionless_hamiltonian(
    h_fn: TimeDependentHamiltonian, h: Optional[float] = None, time_scale: float = 1.0
) -> TimeDependentHamiltonian:
    """``t -> H(t) + H_cd(t)``."""

    def assisted(t: float) -> np.ndarray:
        return np.asarray(h_fn(t), dtype=complex) + cd_hamiltonian(h_fn, t, h, time_scale=time_scale)

    return assisted


def adiabatic_phase_track(
    h_fn: TimeDependentHamiltonian, n: int, t_grid: np.ndarray, gap_tol: Optional[float] = None
) -> np.ndarray:
    """Dynamical phase ``-int E_n dt`` of level ``n`` (ascending order) at every grid node."""
    t_grid = np.asarray(t_grid, dtype=float)
    energies = np.empty(t_grid.size)
    for k, t in enumerate(t_grid):
        hamiltonian = np.asarray(h_fn(t), dtype=complex)
        eig = hermitian_eig(hamiltonian)
        if not 0 <= n < eig.dim:
            raise InvariantViolation(f"Level {n} out of range for dimension {eig.dim}")
        _check_gap(eig.values, hamiltonian, float(t), gap_tol)
        energies[k] = eig.values[n]
    return -cumulative_trapezoid(energies, t_grid, initial=0.0)


def adiabatic_phase(
    h_fn: TimeDependentHamiltonian, n: int, t_grid: np.ndarray, gap_tol: Optional[float] = None
) -> AdiabaticPhase:
    """Adiabatic phase of level ``n`` accumulated over ``t_grid``.

    The geometric part vanishes in the parallel-transport gauge and is
    recorded as zero.
    """
    track = adiabatic_phase_track(h_fn, n, t_grid, gap_tol)
    dynamical = float(track[-1])
    return AdiabaticPhase(n=n, value=dynamical, dynamical=dynamical, geometric=0.0)


class LandauZenerHamiltonian:
    """Two-level sweep ``H(t) = (alpha t sigma_z + omega sigma_x) / 2``."""

    def __init__(self, alpha: float, omega: float):
        if not omega > 0:
            raise InvariantViolation(f"Landau-Zener coupling must be positive, got {omega}")
        self.alpha = float(alpha)
        self.omega = float(omega)

    def __call__(self, t: float) -> np.ndarray:
        return 0.5 * (self.alpha * t * _SIGMA_Z + self.omega * _SIGMA_X)

    def analytic_cd(self, t: float) -> np.ndarray:
        """``-(1/2) omega alpha / (alpha^2 t^2 + omega^2) sigma_y``."""
        amplitude = self.omega * self.alpha / ((self.alpha * t) ** 2 + self.omega ** 2)
        return -0.5 * amplitude * _SIGMA_Y

    def __repr__(self) -> str:
        return f"LandauZenerHamiltonian(alpha={self.alpha}, omega={self.omega})"


def landau_zener_fixture(alpha: float, omega: float) -> LandauZenerHamiltonian:
    return LandauZenerHamiltonian(alpha, omega)
