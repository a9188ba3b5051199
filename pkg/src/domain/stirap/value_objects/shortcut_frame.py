"""Instantaneous shortcut quantities."""

import math
from dataclasses import dataclass

import numpy as np

from src.domain.driving.value_objects import CoefficientMask
from src.domain.shared.exceptions import InvariantViolation

CLOSURE_TOLERANCE = 1e-12
_PHI_SLACK = 1e-12


def closure_xi(theta_dot: float, gamma: float, phi: float) -> float:
    """Amplitude that cancels the direct 1-3 coupling: ``2 theta_dot / (sin(gamma) sin(2 phi))``."""
    return 2.0 * theta_dot / (math.sin(gamma) * math.sin(2.0 * phi))


@dataclass(frozen=True)
class ShortcutFrame:
    """Mixing angles, their rates and the closing amplitude ``xi_tilde`` at one instant."""

    theta: float
    theta_dot: float
    gamma: float
    gamma_dot: float
    phi: float
    xi_tilde: float

    def __post_init__(self):
        values = (self.theta, self.theta_dot, self.gamma, self.gamma_dot, self.phi, self.xi_tilde)
        if not all(math.isfinite(v) for v in values):
            raise InvariantViolation("Shortcut frame has non-finite entries")
        if not 0 < self.gamma < math.pi / 2:
            raise InvariantViolation(f"gamma must lie in (0, pi/2), got {self.gamma}")
        if not 0 < self.phi <= math.pi / 4 + _PHI_SLACK:
            raise InvariantViolation(f"phi must lie in (0, pi/4], got {self.phi}")
        expected = closure_xi(self.theta_dot, self.gamma, self.phi)
        if abs(self.xi_tilde - expected) > CLOSURE_TOLERANCE * max(abs(expected), 1e-300):
            raise InvariantViolation(
                f"xi_tilde {self.xi_tilde!r} violates the closure relation (expected {expected!r})"
            )

    @classmethod
    def from_angles(
        cls, theta: float, theta_dot: float, gamma: float, gamma_dot: float, phi: float
    ) -> "ShortcutFrame":
        return cls(
            theta=theta,
            theta_dot=theta_dot,
            gamma=gamma,
            gamma_dot=gamma_dot,
            phi=phi,
            xi_tilde=closure_xi(theta_dot, gamma, phi),
        )

    @property
    def f13_residual(self) -> float:
        """``theta_dot - xi_tilde sin(gamma) sin(2 phi) / 2``; zero by construction."""
        return self.theta_dot - 0.5 * self.xi_tilde * math.sin(self.gamma) * math.sin(2.0 * self.phi)


@dataclass(frozen=True)
class LambdaKappaProducts:
    """Products of the correction coefficients with the quantities they multiply.

    ``lambda_p_xi`` is lambda_p * Xi0, ``kappa_p_phidot`` is kappa_p * phi_dot
    and ``kappa_a_thetadot`` is kappa_a * theta_dot.
    """

    lambda_p_xi: float
    lambda_s_xi: float
    lambda_d_xi: float
    kappa_p_phidot: float
    kappa_s_phidot: float
    kappa_a_thetadot: float

    def to_mask(self, xi0: float, theta_dot: float, phi_dot: float) -> CoefficientMask:
        """Split the products into a mask for a reference drive ``(xi0, theta_dot, phi_dot)``.

        Entries multiplying structural zeros of H0 or H_cd are set to one.
        """
        if xi0 == 0 or theta_dot == 0 or phi_dot == 0:
            raise InvariantViolation("Reference xi0, theta_dot and phi_dot must be nonzero")
        lp = self.lambda_p_xi / xi0
        ls = self.lambda_s_xi / xi0
        ld = self.lambda_d_xi / xi0
        kp = self.kappa_p_phidot / phi_dot
        ks = self.kappa_s_phidot / phi_dot
        ka = self.kappa_a_thetadot / theta_dot
        lam = np.array([[1.0, lp, 1.0], [lp, ld, ls], [1.0, ls, 1.0]])
        kappa = np.array([[1.0, kp, ka], [kp, 1.0, ks], [ka, ks, 1.0]])
        return CoefficientMask(lam=lam, kappa=kappa)
