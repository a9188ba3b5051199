"""Orthonormal eigenbases sampled along a time-dependent path."""

from dataclasses import dataclass, field
from typing import Callable, Tuple

import numpy as np

from src.domain.shared.exceptions import InvariantViolation

GRAM_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class BasisSample:
    """An orthonormal set ``{|phi_n>}`` with energies ``{E_n}`` at one instant.

    ``vectors`` holds the states as columns, in the same order as ``energies``
    and ``labels``.
    """

    energies: np.ndarray
    vectors: np.ndarray
    labels: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        energies = np.asarray(self.energies, dtype=float)
        vectors = np.asarray(self.vectors, dtype=complex)
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "vectors", vectors)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(k) for k in range(energies.size)))

        if vectors.ndim != 2 or vectors.shape[1] != energies.size:
            raise InvariantViolation(
                f"{energies.size} energies do not match vector block of shape {vectors.shape}"
            )
        if len(self.labels) != energies.size:
            raise InvariantViolation("One label per basis state is required")
        if not (np.all(np.isfinite(energies)) and np.all(np.isfinite(vectors))):
            raise InvariantViolation("Basis sample has non-finite entries")

        deviation = float(np.max(np.abs(self.gram() - np.eye(energies.size))))
        if deviation > GRAM_TOLERANCE:
            raise InvariantViolation(f"Basis is not orthonormal: max|G - I| = {deviation:.3e}")

    @property
    def dim(self) -> int:
        return self.energies.size

    def vector(self, index: int) -> np.ndarray:
        return self.vectors[:, index]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def gram(self) -> np.ndarray:
        return self.vectors.conj().T @ self.vectors

    def projector(self, index: int) -> np.ndarray:
        v = self.vectors[:, index]
        return np.outer(v, v.conj())

    def hamiltonian(self) -> np.ndarray:
        """``sum_n E_n |phi_n><phi_n|``."""
        return (self.vectors * self.energies) @ self.vectors.conj().T

    def overlaps(self, other: "BasisSample") -> np.ndarray:
        """``|<phi_n|other_n>|`` level by level."""
        return np.abs(np.sum(self.vectors.conj() * other.vectors, axis=0))


class MovingBasis:
    """A deterministic callable ``t -> BasisSample``.

    ``time_scale`` is the duration the basis evolves over; finite-difference
    steps are taken relative to it.
    """

    def __init__(self, sampler: Callable[[float], BasisSample], label: str = "basis", time_scale: float = 1.0):
        if not (np.isfinite(time_scale) and time_scale > 0):
            raise InvariantViolation(f"time_scale must be positive, got {time_scale}")
        self._sampler = sampler
        self.label = label
        self.time_scale = float(time_scale)

    def __call__(self, t: float) -> BasisSample:
        sample = self._sampler(float(t))
        if not isinstance(sample, BasisSample):
            raise InvariantViolation(f"Basis '{self.label}' returned {type(sample).__name__}")
        return sample

    def __repr__(self) -> str:
        return f"MovingBasis('{self.label}')"
