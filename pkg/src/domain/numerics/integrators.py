"""Fixed-step integrators."""

from typing import Callable

import numpy as np

from src.domain.shared.exceptions import InvariantViolation

RightHandSide = Callable[[np.ndarray, np.ndarray], np.ndarray]


def time_grid(t_start: float, t_end: float, n_steps: int) -> np.ndarray:
    """Uniform grid with ``n_steps`` intervals (``n_steps + 1`` nodes)."""
    if n_steps < 1:
        raise InvariantViolation(f"n_steps must be at least 1, got {n_steps}")
    if not t_end > t_start:
        raise InvariantViolation(f"Empty time window [{t_start}, {t_end}]")
    return np.linspace(t_start, t_end, n_steps + 1)


def rk4_step(
    y: np.ndarray,
    fun: RightHandSide,
    dt: float,
    h_start: np.ndarray,
    h_mid: np.ndarray,
    h_end: np.ndarray,
) -> np.ndarray:
    """Advance ``y`` by one classical Runge-Kutta step.

    ``fun(y, H)`` is the right-hand side evaluated with the Hamiltonian sampled
    at the start, midpoint and end of the step.
    """
    dt2 = dt / 2.0

    k1 = fun(y, h_start)
    k2 = fun(y + k1 * dt2, h_mid)
    k3 = fun(y + k2 * dt2, h_mid)
    k4 = fun(y + k3 * dt, h_end)

    return y + (k1 + 2 * k2 + 2 * k3 + k4) / 6.0 * dt


def schrodinger_rhs(psi: np.ndarray, hamiltonian: np.ndarray) -> np.ndarray:
    return -1j * (hamiltonian @ psi)
