"""Small dense numerics: Hermitian eigensolver, RK4 stepping, seeded streams."""

from .integrators import rk4_step, schrodinger_rhs, time_grid
from .linalg import (
    HermitianEig,
    as_cmatrix,
    as_cvector,
    basis_state,
    hermitian_eig,
    is_hermitian,
    is_unitary,
)
from .random_streams import UniformStream, derive_seed

__all__ = [
    "HermitianEig",
    "UniformStream",
    "as_cmatrix",
    "as_cvector",
    "basis_state",
    "derive_seed",
    "hermitian_eig",
    "is_hermitian",
    "is_unitary",
    "rk4_step",
    "schrodinger_rhs",
    "time_grid",
]
