"""Intermediate-Hamiltonian machinery for an arbitrary orthonormal moving basis.

A basis ``{|phi_n(t)>}`` with energies ``{E_n(t)}`` is followed exactly by

    H(t) = sum_n E_n |phi_n><phi_n| + i sum_n |d phi_n/dt><phi_n|

The derivative is taken by central differences. In the ``parallel`` gauge
the neighbouring samples are phase-aligned first, which removes the diagonal
connection term; the ``basis`` gauge keeps the phases the sampler returns.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from src.domain.driving.value_objects import BasisSample, CoefficientMask, MovingBasis
from src.domain.numerics import as_cmatrix, is_hermitian
from src.domain.shared.exceptions import (
    BasisJump,
    HermiticityViolation,
    InvariantViolation,
)

logger = logging.getLogger(__name__)

STEP_FRACTION = 1e-6
JUMP_THRESHOLD = 0.9
RICHARDSON_TOLERANCE = 1e-5
GAUGES = ("parallel", "basis")


def intermediate_h(h0: np.ndarray, h_cd: np.ndarray, mask: CoefficientMask) -> np.ndarray:
    """Entry ``(l, r)`` is ``lam[l, r] * H0[l, r] - kappa[l, r] * Hcd[l, r]``.

    Raises:
        MaskAsymmetry: if either mask block is not symmetric.
        HermiticityViolation: if an input operator is not Hermitian.
    """
    h0 = as_cmatrix(h0)
    h_cd = as_cmatrix(h_cd)
    if h0.shape != h_cd.shape or h0.shape[0] != mask.dim:
        raise InvariantViolation(
            f"Dimension mismatch: H0 {h0.shape}, Hcd {h_cd.shape}, mask {mask.dim}"
        )
    mask.check_symmetry()
    for name, matrix in (("H0", h0), ("Hcd", h_cd)):
        if not is_hermitian(matrix, 1e-10 * max(1.0, float(np.max(np.abs(matrix))))):
            raise HermiticityViolation(f"{name} is not Hermitian")
    return mask.lam * h0 - mask.kappa * h_cd


def _aligned(reference: np.ndarray, neighbour: np.ndarray, gauge: str, t: float) -> np.ndarray:
    overlap = np.vdot(reference, neighbour)
    magnitude = abs(overlap)
    if magnitude < JUMP_THRESHOLD:
        raise BasisJump(
            f"Basis changes discontinuously near t={t:.6g} (|overlap| = {magnitude:.3f})",
            t=t,
            overlap=magnitude,
        )
    if gauge == "parallel":
        return neighbour * (np.conj(overlap) / magnitude)
    return neighbour


def difference_step(basis: MovingBasis, h: Optional[float] = None) -> float:
    """``h`` when given, else ``1e-6`` of the basis time scale."""
    return STEP_FRACTION * basis.time_scale if h is None else h


def basis_derivatives(
    basis: MovingBasis, t: float, h: Optional[float] = None, gauge: str = "parallel"
) -> Tuple[BasisSample, np.ndarray]:
    """Sample at ``t`` and the central-difference derivative of every column."""
    if gauge not in GAUGES:
        raise InvariantViolation(f"Unknown gauge '{gauge}', expected one of {GAUGES}")
    h = difference_step(basis, h)
    if h <= 0:
        raise InvariantViolation(f"Finite-difference step must be positive, got {h}")

    centre = basis(t)
    forward = basis(t + h)
    backward = basis(t - h)
    if forward.dim != centre.dim or backward.dim != centre.dim:
        raise BasisJump(f"Basis dimension changes near t={t:.6g}", t=t)

    derivatives = np.empty_like(centre.vectors)
    for n in range(centre.dim):
        reference = centre.vector(n)
        plus = _aligned(reference, forward.vector(n), gauge, t)
        minus = _aligned(reference, backward.vector(n), gauge, t)
        derivatives[:, n] = (plus - minus) / (2.0 * h)
    return centre, derivatives


def numeric_transitionless(
    basis: MovingBasis,
    t: float,
    h: Optional[float] = None,
    gauge: str = "parallel",
    richardson: bool = True,
) -> np.ndarray:
    """Transitionless Hamiltonian for ``basis`` at time ``t``.

    The step ``h`` defaults to ``1e-6`` of the basis time scale. With
    ``richardson`` the derivative is recomputed at ``2h`` and a warning is
    logged when the two disagree by more than ``1e-5``.

    Raises:
        BasisJump: when a neighbouring sample overlaps its reference by less than 0.9.
    """
    h = difference_step(basis, h)
    sample, derivatives = basis_derivatives(basis, t, h, gauge)
    if richardson:
        _, coarse = basis_derivatives(basis, t, 2.0 * h, gauge)
        richardson_check(float(np.max(np.abs(coarse - derivatives))), f"derivative of '{basis.label}'", t)
    return sample.hamiltonian() + 1j * (derivatives @ sample.vectors.conj().T)


def richardson_check(disagreement: float, what: str, t: float) -> bool:
    """True, with a warning, when an ``h`` versus ``2h`` comparison exceeds ``1e-5``."""
    if disagreement <= RICHARDSON_TOLERANCE:
        return False
    logger.warning(f"Finite-difference {what} at t={t:.6g} changes by {disagreement:.3e} between h and 2h")
    return True


def gauge_connection(basis: MovingBasis, t: float, h: Optional[float] = None) -> np.ndarray:
    """``Im <phi_n|d phi_n/dt>`` for every level, in the basis's own phases.

    The ``parallel`` and ``basis`` outputs of :func:`numeric_transitionless`
    differ by ``sum_n a_n |phi_n><phi_n|`` with ``a_n`` these values.
    """
    sample, derivatives = basis_derivatives(basis, t, h, gauge="basis")
    return np.sum(sample.vectors.conj() * derivatives, axis=0).imag


def f_matrix(h_tilde: np.ndarray) -> np.ndarray:
    """Matrix elements ``F[l, r] = <l|H|r>`` in the bare basis."""
    return as_cmatrix(h_tilde).copy()


def boundary_overlaps(basis: MovingBasis, reference: MovingBasis, t: float) -> np.ndarray:
    sample = basis(t)
    ref = reference(t)
    if sample.dim != ref.dim:
        raise InvariantViolation(f"Cannot compare bases of dimension {sample.dim} and {ref.dim}")
    return ref.overlaps(sample)


def boundary_check(basis: MovingBasis, reference: MovingBasis, t: float, tol: float) -> bool:
    """True when every ``|<phi_n(t)|phi~_n(t)>|`` is at least ``1 - tol``."""
    return bool(np.all(boundary_overlaps(basis, reference, t) >= 1.0 - tol))
