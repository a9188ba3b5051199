"""Dense complex linear algebra for small (N <= 4) Hermitian problems."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from src.domain.shared.exceptions import HermiticityViolation, InvariantViolation

logger = logging.getLogger(__name__)

MAX_DIM = 4
# Relative eigenvalue gap below which the closed forms hand over to LAPACK.
_CLOSED_FORM_GAP = 1e-2
_PHASE_PIVOT_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class HermitianEig:
    """Eigenpairs of a Hermitian matrix.

    ``values`` are ascending, ``vectors`` holds the orthonormal eigenvectors as
    columns. Each vector is normalised so that its largest-magnitude component
    is real and positive.
    """

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        if self.values.ndim != 1 or self.vectors.shape != (self.values.size, self.values.size):
            raise InvariantViolation(
                f"Eigenvector block {self.vectors.shape} does not match {self.values.size} values"
            )
        if np.any(np.diff(self.values) < 0):
            raise InvariantViolation("Eigenvalues must be ascending")

    @property
    def dim(self) -> int:
        return self.values.size

    def vector(self, index: int) -> np.ndarray:
        """Return eigenvector ``index`` as a 1-D array."""
        return self.vectors[:, index]

    def projector(self, index: int) -> np.ndarray:
        v = self.vectors[:, index]
        return np.outer(v, v.conj())

    def reconstruct(self) -> np.ndarray:
        """Rebuild ``sum_i values_i |v_i><v_i|``."""
        return (self.vectors * self.values) @ self.vectors.conj().T


def as_cvector(entries: Sequence[complex], normalized: bool = False) -> np.ndarray:
    """Validate and convert to a complex state vector."""
    vec = np.asarray(entries, dtype=complex)
    if vec.ndim != 1:
        raise InvariantViolation(f"Vector must be one-dimensional, got shape {vec.shape}")
    if not np.all(np.isfinite(vec)):
        raise InvariantViolation("Vector has non-finite entries")
    if normalized and abs(np.linalg.norm(vec) - 1.0) > 1e-9:
        raise InvariantViolation(f"State vector norm {np.linalg.norm(vec):.12g} is not 1")
    return vec


def as_cmatrix(entries) -> np.ndarray:
    """Validate and convert to a square complex matrix."""
    mat = np.asarray(entries, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise InvariantViolation(f"Matrix must be square, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise InvariantViolation("Matrix has non-finite entries")
    return mat


def basis_state(index: int, dim: int = 3) -> np.ndarray:
    """Bare state ``|index+1>`` of a ``dim``-level system."""
    state = np.zeros(dim, dtype=complex)
    state[index] = 1.0
    return state


def is_hermitian(matrix: np.ndarray, tol: float = 1e-10) -> bool:
    return bool(np.max(np.abs(matrix - matrix.conj().T)) <= tol)


def is_unitary(matrix: np.ndarray, tol: float = 1e-10) -> bool:
    identity = np.eye(matrix.shape[0])
    return bool(np.max(np.abs(matrix.conj().T @ matrix - identity)) <= tol)


def hermitian_eig(matrix, tol: Optional[float] = None) -> HermitianEig:
    """Diagonalise a Hermitian matrix of dimension at most four.

    Dimensions two and three use closed forms (quadratic formula and the
    trigonometric solution of the characteristic cubic). Near-degenerate
    spectra and dimension four go through ``numpy.linalg.eigh``.

    Raises:
        HermiticityViolation: if ``max|M - M^dagger|`` exceeds ``tol``.
    """
    mat = as_cmatrix(matrix)
    dim = mat.shape[0]
    if dim > MAX_DIM:
        raise InvariantViolation(f"hermitian_eig supports N <= {MAX_DIM}, got {dim}")

    scale = float(np.max(np.abs(mat))) if mat.size else 0.0
    tolerance = tol if tol is not None else 1e-10 * max(1.0, scale)
    asymmetry = float(np.max(np.abs(mat - mat.conj().T)))
    if asymmetry > tolerance:
        raise HermiticityViolation(
            f"Matrix is not Hermitian: max|M - M^dagger| = {asymmetry:.3e} > {tolerance:.3e}",
            asymmetry=asymmetry,
        )
    mat = 0.5 * (mat + mat.conj().T)

    if dim == 1:
        return HermitianEig(values=np.array([mat[0, 0].real]), vectors=np.ones((1, 1), dtype=complex))

    result = None
    if dim == 2:
        result = _eig_2x2(mat)
    elif dim == 3:
        result = _eig_3x3(mat)

    if result is None:
        values, vectors = np.linalg.eigh(mat)
        result = (values, vectors)

    values, vectors = result
    vectors = np.column_stack([_fix_phase(vectors[:, k]) for k in range(dim)])
    return HermitianEig(values=np.asarray(values, dtype=float), vectors=vectors)


def _fix_phase(vector: np.ndarray) -> np.ndarray:
    vector = vector / np.linalg.norm(vector)
    magnitudes = np.abs(vector)
    pivot = int(np.argmax(magnitudes >= magnitudes.max() * (1.0 - _PHASE_PIVOT_SLACK)))
    return vector * (np.conj(vector[pivot]) / magnitudes[pivot])


def _eig_2x2(mat: np.ndarray):
    a = mat[0, 0].real
    d = mat[1, 1].real
    b = mat[0, 1]
    mean = 0.5 * (a + d)
    half_gap = float(np.hypot(0.5 * (a - d), abs(b)))
    if half_gap <= _CLOSED_FORM_GAP * max(abs(mean), half_gap, np.finfo(float).tiny):
        return None
    values = np.array([mean - half_gap, mean + half_gap])
    columns = []
    for lam in values:
        first = np.array([b, lam - a], dtype=complex)
        second = np.array([lam - d, np.conj(b)], dtype=complex)
        columns.append(first if np.linalg.norm(first) >= np.linalg.norm(second) else second)
    return values, np.column_stack(columns)


def _eig_3x3(mat: np.ndarray):
    q = float(np.trace(mat).real) / 3.0
    shifted = mat - q * np.eye(3)
    p = float(np.sqrt(np.sum(np.abs(shifted) ** 2) / 6.0))
    if p == 0.0:
        return None

    r = float(np.clip(np.linalg.det(shifted / p).real / 2.0, -1.0, 1.0))
    angle = np.arccos(r) / 3.0
    largest = q + 2.0 * p * np.cos(angle)
    smallest = q + 2.0 * p * np.cos(angle + 2.0 * np.pi / 3.0)
    middle = 3.0 * q - largest - smallest
    values = np.array([smallest, middle, largest])

    gap = min(middle - smallest, largest - middle)
    if gap < _CLOSED_FORM_GAP * max(p, abs(q)):
        logger.debug(f"Near-degenerate 3x3 spectrum (gap {gap:.3e}), using eigh")
        return None

    columns = [_null_vector_3x3(mat - lam * np.eye(3)) for lam in values]
    return values, np.column_stack(columns)


def _null_vector_3x3(shifted: np.ndarray) -> np.ndarray:
    rows = shifted
    candidates = (
        np.cross(rows[0], rows[1]),
        np.cross(rows[0], rows[2]),
        np.cross(rows[1], rows[2]),
    )
    return max(candidates, key=np.linalg.norm)
