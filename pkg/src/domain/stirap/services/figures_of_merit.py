"""Pulse area, excited-state exposure and peak-amplitude metrics."""

import enum
import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy.integrate import quad, trapezoid

from src.domain.numerics import time_grid
from src.domain.shared.exceptions import InvariantViolation
from src.domain.stirap.services import shortcut
from src.domain.stirap.value_objects.pulse_params import PulseParams
from src.domain.stirap.value_objects.run_summary import OmegaMax, PulseArea

logger = logging.getLogger(__name__)

DEFAULT_GRID_STEPS = 4096


class Trend(enum.Enum):
    STRICTLY_INCREASING = "strictly_increasing"
    STRICTLY_DECREASING = "strictly_decreasing"
    NEITHER = "neither"


def monotonic_trend(values: Sequence[float]) -> Trend:
    steps = np.diff(np.asarray(values, dtype=float))
    if steps.size and np.all(steps > 0):
        return Trend.STRICTLY_INCREASING
    if steps.size and np.all(steps < 0):
        return Trend.STRICTLY_DECREASING
    return Trend.NEITHER


def pulse_area(times, omega_p, omega_s) -> PulseArea:
    """Trapezoidal ``int sqrt(Op^2 + Os^2) dt``."""
    return pulse_area_from_amplitude(times, np.hypot(omega_p, omega_s))


def pulse_area_from_amplitude(times, omega0) -> PulseArea:
    """Trapezoidal ``int Omega0 dt``."""
    return PulseArea(radians=float(trapezoid(np.asarray(omega0, dtype=float), np.asarray(times, dtype=float))))


def p2_bar(gamma0: float) -> float:
    """Average excited population ``1/2 - sin(2 pi gamma0) / (4 pi gamma0)`` for a Gaussian gamma."""
    if not 0 < gamma0 <= 0.5:
        raise InvariantViolation(f"gamma0 must lie in (0, 0.5], got {gamma0}")
    return 0.5 - math.sin(2.0 * math.pi * gamma0) / (4.0 * math.pi * gamma0)


def p2_bar_integral(gamma_min: float, gamma_max: float) -> float:
    """Mean of ``sin^2(gamma)`` over ``[gamma_min, gamma_max]`` by adaptive quadrature."""
    if not gamma_max > gamma_min:
        raise InvariantViolation(f"Empty gamma range [{gamma_min}, {gamma_max}]")
    value, _ = quad(lambda g: math.sin(g) ** 2, gamma_min, gamma_max, epsabs=1e-14, epsrel=1e-13)
    return value / (gamma_max - gamma_min)


def epsilon(gamma_a: float, p2_bar_value: float, t_omega_max: float) -> float:
    """Decoherence exposure ``Gamma_a * P2_bar * (T Omega_max)``; not bounded by one."""
    for name, value in (("gamma_a", gamma_a), ("p2_bar", p2_bar_value), ("t_omega_max", t_omega_max)):
        if value < 0:
            raise InvariantViolation(f"{name} must be non-negative, got {value}")
    return gamma_a * p2_bar_value * t_omega_max


def center_amplitude(p: PulseParams) -> float:
    """Modified amplitude at ``t = 0``: ``(pi/(4 tau)) sqrt(cot^2(pi g0) + 4 cot^2(2 phi) / cos^2(pi g0))``."""
    return (math.pi / (4.0 * p.tau)) * _angular_factor(p)


def closed_form_peak(p: PulseParams) -> float:
    """The published peak-amplitude expression, prefactor ``pi/tau``."""
    return (math.pi / p.tau) * _angular_factor(p)


def _angular_factor(p: PulseParams) -> float:
    g = math.pi * p.gamma0
    return math.sqrt(1.0 / math.tan(g) ** 2 + 4.0 / (math.tan(2.0 * p.phi) ** 2 * math.cos(g) ** 2))


def omega_max(p: PulseParams, n_steps: int = DEFAULT_GRID_STEPS) -> OmegaMax:
    """Largest modified amplitude on an ``n_steps`` grid over the window."""
    times = time_grid(p.t_start, p.t_end, n_steps)
    amplitude = shortcut.drive_columns(times, p).omega0
    k = int(np.argmax(amplitude))
    return OmegaMax(
        numeric_max=float(amplitude[k]),
        t_argmax=float(times[k]),
        at_center=center_amplitude(p),
        closed_form_peak=closed_form_peak(p),
    )


@dataclass(frozen=True)
class EpsilonSweep:
    axis: str
    values: Tuple[float, ...]
    epsilons: Tuple[float, ...]
    trend: Trend


def epsilon_sweep(
    axis: str, values: Sequence[float], base: PulseParams, gamma_a: float = 0.5
) -> EpsilonSweep:
    """Exposure ``epsilon`` along ``gamma0`` or ``phi`` with the other parameters of ``base``."""
    if axis not in ("gamma0", "phi"):
        raise InvariantViolation(f"epsilon sweep axis must be 'gamma0' or 'phi', got '{axis}'")
    epsilons = []
    for value in values:
        p = base.with_updates(**{axis: float(value)})
        t_omega = omega_max(p).numeric_max * p.T
        epsilons.append(epsilon(gamma_a, p2_bar(p.gamma0), t_omega))
    trend = monotonic_trend(epsilons)
    logger.debug(f"epsilon sweep over {axis}: {trend.value}")
    return EpsilonSweep(axis=axis, values=tuple(float(v) for v in values), epsilons=tuple(epsilons), trend=trend)
