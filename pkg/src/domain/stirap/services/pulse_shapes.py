"""Closed-form pulse shapes.

The mixing angle follows a sigmoid from 0 to pi/2 and the shortcut angle a
Gaussian centred on the window. All functions accept scalars or arrays.
"""

import math

import numpy as np
from scipy.special import expit

from src.domain.shared.exceptions import ConfigMissing, InvariantViolation
from src.domain.stirap.value_objects.pulse_params import PulseParams


def theta(t, p: PulseParams):
    """``(pi/2) / (1 + exp(-t/tau))``."""
    return 0.5 * np.pi * expit(np.asarray(t, dtype=float) / p.tau)


def theta_dot(t, p: PulseParams):
    x = np.asarray(t, dtype=float) / p.tau
    return (0.5 * np.pi / p.tau) * expit(x) * expit(-x)


def theta_dot_max(p: PulseParams) -> float:
    """Peak of theta_dot, reached at ``t = 0``."""
    return math.pi / (8.0 * p.tau)


def gamma(t, p: PulseParams):
    """``pi gamma0 exp(-t^2/tau_c^2)``."""
    t = np.asarray(t, dtype=float)
    return np.pi * p.gamma0 * np.exp(-(t / p.tau_c) ** 2)


def gamma_dot(t, p: PulseParams):
    t = np.asarray(t, dtype=float)
    return -2.0 * np.pi * p.gamma0 * t / p.tau_c ** 2 * np.exp(-(t / p.tau_c) ** 2)


def omega0_envelope(t, p: PulseParams):
    """Super-Gaussian ``chi exp(-(t/T0)^(2n))``.

    Raises:
        ConfigMissing: if any of ``chi``, ``T0`` or ``n`` is unset.
    """
    if not p.has_envelope:
        missing = [name for name in ("chi", "T0", "n") if getattr(p, name) is None]
        raise ConfigMissing(f"Super-Gaussian envelope needs {', '.join(missing)}")
    t = np.asarray(t, dtype=float)
    return p.chi * np.exp(-((t / p.T0) ** (2 * int(p.n))))


def constant_envelope(t, p: PulseParams):
    """Flat reference amplitude ``omega0_ref`` over the window."""
    return np.full(np.shape(t), p.omega0_ref, dtype=float) if np.ndim(t) else float(p.omega0_ref)


def adiabatic_threshold(p: PulseParams, target: float = 5.0) -> float:
    """Smallest constant Omega0 at which the adiabaticity ratio stays above ``target``.

    The ratio ``Xi0 sin^2(phi) / (theta_dot cos(phi))`` with
    ``Xi0 = Omega0 / sin(2 phi)`` is smallest where theta_dot peaks.
    """
    return target * theta_dot_max(p) * math.cos(p.phi) * math.sin(2 * p.phi) / math.sin(p.phi) ** 2


ENVELOPES = {
    "constant": constant_envelope,
    "super_gaussian": omega0_envelope,
}


def envelope_function(name: str):
    """Reference envelope by name: ``constant`` or ``super_gaussian``."""
    if name not in ENVELOPES:
        raise InvariantViolation(f"Unknown envelope '{name}', expected one of {sorted(ENVELOPES)}")
    return ENVELOPES[name]
