"""Elementwise correction masks for intermediate Hamiltonians."""

from dataclasses import dataclass

import numpy as np

from src.domain.shared.exceptions import InvariantViolation, MaskAsymmetry

SYMMETRY_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class CoefficientMask:
    """Real multipliers applied entry by entry: ``lam`` to H0 and ``kappa`` to H_cd.

    Both blocks must be symmetric so that the corrected operator stays
    Hermitian.
    """

    lam: np.ndarray
    kappa: np.ndarray

    def __post_init__(self):
        lam = np.asarray(self.lam, dtype=float)
        kappa = np.asarray(self.kappa, dtype=float)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "kappa", kappa)

        if lam.ndim != 2 or lam.shape[0] != lam.shape[1] or lam.shape != kappa.shape:
            raise InvariantViolation(f"Mask blocks must be square and equal, got {lam.shape}, {kappa.shape}")
        if not (np.all(np.isfinite(lam)) and np.all(np.isfinite(kappa))):
            raise InvariantViolation("Mask has non-finite entries")
        self.check_symmetry()

    @property
    def dim(self) -> int:
        return self.lam.shape[0]

    def check_symmetry(self) -> None:
        for name, block in (("lambda", self.lam), ("kappa", self.kappa)):
            scale = max(1.0, float(np.max(np.abs(block))))
            asymmetry = float(np.max(np.abs(block - block.T)))
            if asymmetry > SYMMETRY_TOLERANCE * scale:
                raise MaskAsymmetry(f"{name} mask is not symmetric (max asymmetry {asymmetry:.3e})")

    @classmethod
    def identity(cls, dim: int) -> "CoefficientMask":
        """Mask leaving H0 untouched and dropping H_cd."""
        return cls(lam=np.ones((dim, dim)), kappa=np.zeros((dim, dim)))

    @classmethod
    def cd_only(cls, dim: int) -> "CoefficientMask":
        return cls(lam=np.zeros((dim, dim)), kappa=np.ones((dim, dim)))
