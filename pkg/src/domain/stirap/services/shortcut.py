"""Closed-form shortcut for off-resonant STIRAP.

The intermediate eigenvectors rotate the dark state by an angle ``gamma``
towards the excited level. Choosing the correction products so that the
direct 1-3 coupling of the transitionless Hamiltonian cancels fixes the
amplitude ``xi_tilde = 2 theta_dot / (sin(gamma) sin(2 phi))``; what remains
is an ordinary pump/Stokes/detuning drive with phases.

With ``c, s = cos(theta), sin(theta)`` and the rotation rate ``gamma_dot``,
the drive is

    Op e^{i vp} = (Xi cos(g) s sin(2 phi) + 2 gamma_dot c) - 2i Xi tan(g) c cos(2 phi)
    Os e^{-i vs} = (Xi cos(g) c sin(2 phi) - 2 gamma_dot s) - 2i Xi tan(g) s cos(2 phi)
    Delta = Xi cos(2 g) cos(2 phi) / cos(g)^2
"""

import logging
import math
from typing import NamedTuple

import numpy as np

from src.domain.driving.value_objects import BasisSample, CoefficientMask, MovingBasis
from src.domain.shared.exceptions import CotangentSingularity, GammaUnderflow
from src.domain.stirap.services import pulse_shapes
from src.domain.stirap.value_objects.modified_drive import (
    DriveColumns,
    ModifiedDrive,
    SmallDetuningApprox,
)
from src.domain.stirap.value_objects.pulse_params import PulseParams
from src.domain.stirap.value_objects.shortcut_frame import LambdaKappaProducts, ShortcutFrame

logger = logging.getLogger(__name__)

GAMMA_FLOOR = 1e-12
_COT_GUARD = 1e-15
INTERMEDIATE_LABELS = ("0", "+", "-")


class FrameArrays(NamedTuple):
    theta: np.ndarray
    theta_dot: np.ndarray
    gamma: np.ndarray
    gamma_dot: np.ndarray
    phi: float
    xi_tilde: np.ndarray


class _DriveTerms(NamedTuple):
    x_p: np.ndarray
    y_p: np.ndarray
    x_s: np.ndarray
    y_s: np.ndarray
    delta: np.ndarray
    omega0: np.ndarray


def frame_arrays(times, p: PulseParams) -> FrameArrays:
    """Vectorised frame quantities on a time grid.

    Raises:
        GammaUnderflow: if ``gamma`` drops to ``1e-12`` or below anywhere.
    """
    times = np.asarray(times, dtype=float)
    gamma = pulse_shapes.gamma(times, p)
    if np.any(gamma <= GAMMA_FLOOR):
        raise GammaUnderflow(
            f"gamma <= {GAMMA_FLOOR:g} (gamma0={p.gamma0}); the shortcut frame cannot close",
            gamma0=p.gamma0,
        )
    theta_dot = pulse_shapes.theta_dot(times, p)
    return FrameArrays(
        theta=pulse_shapes.theta(times, p),
        theta_dot=theta_dot,
        gamma=gamma,
        gamma_dot=pulse_shapes.gamma_dot(times, p),
        phi=p.phi,
        xi_tilde=2.0 * theta_dot / (np.sin(gamma) * math.sin(2.0 * p.phi)),
    )


def frame_at(t: float, p: PulseParams) -> ShortcutFrame:
    """Shortcut frame at one instant of the window."""
    arrays = frame_arrays(np.array([t]), p)
    return ShortcutFrame.from_angles(
        theta=float(arrays.theta[0]),
        theta_dot=float(arrays.theta_dot[0]),
        gamma=float(arrays.gamma[0]),
        gamma_dot=float(arrays.gamma_dot[0]),
        phi=p.phi,
    )


def lambda_kappa_coeffs(f: ShortcutFrame) -> LambdaKappaProducts:
    """Correction products for the frame.

    Raises:
        CotangentSingularity: at ``theta`` equal to 0 or pi/2, where the
            individual kappa products diverge.
    """
    if abs(f.theta) < _COT_GUARD or abs(f.theta - 0.5 * math.pi) < _COT_GUARD:
        raise CotangentSingularity(f"cot/tan of theta={f.theta!r} is singular")
    xi = f.xi_tilde
    cg = math.cos(f.gamma)
    tg = math.tan(f.gamma)
    cos2phi = math.cos(2.0 * f.phi)
    return LambdaKappaProducts(
        lambda_p_xi=xi * cg,
        lambda_s_xi=xi * cg,
        lambda_d_xi=xi * math.cos(2.0 * f.gamma) / cg ** 2,
        kappa_p_phidot=xi * tg * cos2phi / math.tan(f.theta),
        kappa_s_phidot=-xi * math.tan(f.theta) * tg * cos2phi,
        kappa_a_thetadot=0.5 * xi * math.sin(f.gamma) * math.sin(2.0 * f.phi),
    )


def coefficient_mask(f: ShortcutFrame, xi0: float, phi_dot_ref: float = 1.0) -> CoefficientMask:
    """Mask turning a reference ``H0`` (amplitude ``xi0``) and ``H_cd`` (rates ``theta_dot``,
    ``phi_dot_ref``) into :func:`intermediate_h0` via the generic elementwise correction.

    ``phi_dot_ref`` is a nonzero placeholder: the reference drive keeps ``phi`` fixed.
    """
    return lambda_kappa_coeffs(f).to_mask(xi0, f.theta_dot, phi_dot_ref)


def intermediate_h0(f: ShortcutFrame) -> np.ndarray:
    """Intermediate Hamiltonian from entry-level products; finite for every theta."""
    xi = f.xi_tilde
    s, c = math.sin(f.theta), math.cos(f.theta)
    cg, sg, tg = math.cos(f.gamma), math.sin(f.gamma), math.tan(f.gamma)
    sin2phi, cos2phi = math.sin(2.0 * f.phi), math.cos(2.0 * f.phi)

    h12 = 0.5 * xi * cg * s * sin2phi - 1j * xi * c * tg * cos2phi
    h23 = 0.5 * xi * cg * c * sin2phi - 1j * xi * s * tg * cos2phi
    h13 = -0.5j * xi * sg * sin2phi
    h22 = xi * math.cos(2.0 * f.gamma) * cos2phi / cg ** 2
    return np.array(
        [
            [0.0, h12, h13],
            [np.conj(h12), h22, h23],
            [np.conj(h13), np.conj(h23), 0.0],
        ],
        dtype=complex,
    )


def intermediate_vectors(theta, gamma, phi) -> np.ndarray:
    """Columns ``|phi~_0>, |phi~_+>, |phi~_->``; at ``gamma = 0`` the reference spectrum."""
    s, c = math.sin(theta), math.cos(theta)
    sg, cg = math.sin(gamma), math.cos(gamma)
    sp, cp = math.sin(phi), math.cos(phi)
    dark = np.array([c, 0.0, -s], dtype=complex)
    bright = np.array([s, 0.0, c], dtype=complex)
    excited = np.array([0.0, 1.0, 0.0], dtype=complex)

    rotated_excited = cg * excited - 1j * sg * dark
    zero = cg * dark - 1j * sg * excited
    plus = sp * bright + cp * rotated_excited
    minus = cp * bright - sp * rotated_excited
    return np.column_stack([zero, plus, minus])


def intermediate_energies(f: ShortcutFrame) -> np.ndarray:
    xi = f.xi_tilde
    sp2, cp2 = math.sin(f.phi) ** 2, math.cos(f.phi) ** 2
    return np.array([
        xi * (sp2 ** 2 - cp2 ** 2) * math.tan(f.gamma) ** 2,
        xi * cp2,
        -xi * sp2,
    ])


def intermediate_eigvecs(f: ShortcutFrame) -> BasisSample:
    return BasisSample(
        energies=intermediate_energies(f),
        vectors=intermediate_vectors(f.theta, f.gamma, f.phi),
        labels=INTERMEDIATE_LABELS,
    )


def intermediate_basis(p: PulseParams) -> MovingBasis:
    """The intermediate eigenbasis along the pulse, as a moving basis."""
    return MovingBasis(lambda t: intermediate_eigvecs(frame_at(t, p)), label="intermediate", time_scale=p.T)


def _drive_terms(theta, gamma, gamma_dot, phi, xi) -> _DriveTerms:
    s, c = np.sin(theta), np.cos(theta)
    cg, tg = np.cos(gamma), np.tan(gamma)
    sin2phi, cos2phi = math.sin(2.0 * phi), math.cos(2.0 * phi)

    coupling = xi * cg * sin2phi
    detuned = 2.0 * xi * tg * cos2phi
    return _DriveTerms(
        x_p=coupling * s + 2.0 * gamma_dot * c,
        y_p=-detuned * c,
        x_s=coupling * c - 2.0 * gamma_dot * s,
        y_s=detuned * s,
        delta=xi * np.cos(2.0 * gamma) * cos2phi / cg ** 2,
        omega0=np.sqrt(coupling ** 2 + detuned ** 2 + 4.0 * gamma_dot ** 2),
    )


def modified_drive(f: ShortcutFrame) -> ModifiedDrive:
    """Pump/Stokes amplitudes and phases of the transitionless Hamiltonian.

    Phases use the two-argument arctangent. When both of its arguments vanish
    the phase is reported as zero and flagged undefined.
    """
    terms = _drive_terms(f.theta, f.gamma, f.gamma_dot, f.phi, f.xi_tilde)
    omega_p = math.hypot(terms.x_p, terms.y_p)
    omega_s = math.hypot(terms.x_s, terms.y_s)
    p_undefined = terms.x_p == 0 and terms.y_p == 0
    s_undefined = terms.x_s == 0 and terms.y_s == 0
    if p_undefined or s_undefined:
        logger.debug(f"Undefined drive phase at theta={f.theta:.6g} (pump={p_undefined}, stokes={s_undefined})")
    return ModifiedDrive(
        omega_p_t=omega_p,
        omega_s_t=omega_s,
        phase_p=0.0 if p_undefined else math.atan2(terms.y_p, terms.x_p),
        phase_s=0.0 if s_undefined else math.atan2(terms.y_s, terms.x_s),
        delta_t=float(terms.delta),
        omega0_t=float(terms.omega0),
        theta_t=math.atan2(omega_p, omega_s),
        phase_p_undefined=p_undefined,
        phase_s_undefined=s_undefined,
    )


def drive_columns(times, p: PulseParams) -> DriveColumns:
    """:func:`modified_drive` on a whole grid."""
    arrays = frame_arrays(times, p)
    terms = _drive_terms(arrays.theta, arrays.gamma, arrays.gamma_dot, arrays.phi, arrays.xi_tilde)
    return DriveColumns(
        times=np.asarray(times, dtype=float),
        omega_p=np.hypot(terms.x_p, terms.y_p),
        omega_s=np.hypot(terms.x_s, terms.y_s),
        phase_p=np.arctan2(terms.y_p, terms.x_p),
        phase_s=np.arctan2(terms.y_s, terms.x_s),
        delta=terms.delta,
        theta=arrays.theta,
        gamma=arrays.gamma,
    )


def h_tilde(d: ModifiedDrive) -> np.ndarray:
    """``(1/2) [[0, Op e^{i vp}, 0], [c.c., 2 Delta, Os e^{-i vs}], [0, c.c., 0]]``."""
    pump = d.omega_p_t * np.exp(1j * d.phase_p)
    stokes = d.omega_s_t * np.exp(-1j * d.phase_s)
    return 0.5 * np.array(
        [
            [0.0, pump, 0.0],
            [np.conj(pump), 2.0 * d.delta_t, stokes],
            [0.0, np.conj(stokes), 0.0],
        ],
        dtype=complex,
    )


def h_tilde_stack(columns: DriveColumns) -> np.ndarray:
    """One Lambda Hamiltonian per grid point, shape ``(n, 3, 3)``."""
    pump = 0.5 * columns.omega_p * np.exp(1j * columns.phase_p)
    stokes = 0.5 * columns.omega_s * np.exp(-1j * columns.phase_s)
    stack = np.zeros((len(columns), 3, 3), dtype=complex)
    stack[:, 0, 1] = pump
    stack[:, 1, 0] = np.conj(pump)
    stack[:, 1, 1] = columns.delta
    stack[:, 1, 2] = stokes
    stack[:, 2, 1] = np.conj(stokes)
    return stack


def small_detuning_approx(f: ShortcutFrame) -> SmallDetuningApprox:
    """Amplitude and angle expanded about resonance, next to the exact values.

    Built from the half Rabi frequencies ``g = lambda Omega / 2`` of the
    corrected pump and Stokes couplings; exact at ``phi = pi/4``.
    """
    coupling = 0.5 * f.xi_tilde * math.cos(f.gamma) * math.sin(2.0 * f.phi)
    g_p = coupling * math.sin(f.theta)
    g_s = coupling * math.cos(f.theta)
    g = math.hypot(g_p, g_s)
    exact = modified_drive(f)
    return SmallDetuningApprox(
        omega0_approx=2.0 * math.sqrt(g ** 2 + f.gamma_dot ** 2),
        theta_approx=f.theta + math.atan(f.gamma_dot / g),
        omega0_exact=exact.omega0_t,
        theta_exact=exact.theta_t,
    )


def reference_gamma(f: ShortcutFrame) -> float:
    """Adiabatic-reference rotation ``arctan(theta_dot / |g|)``.

    ``g`` are the corrected half Rabi frequencies of the frame; on a closed
    frame this reproduces ``f.gamma``.
    """
    coupling = 0.5 * f.xi_tilde * math.cos(f.gamma) * math.sin(2.0 * f.phi)
    g = math.hypot(coupling * math.sin(f.theta), coupling * math.cos(f.theta))
    return math.atan(f.theta_dot / g)
