"""Domain services for transitionless driving and propagation."""

from .counterdiabatic import (
    LandauZenerHamiltonian,
    adiabatic_phase,
    adiabatic_phase_track,
    cd_hamiltonian,
    landau_zener_fixture,
    transitionless_hamiltonian,
)
from .propagation import propagate_lindblad, propagate_schrodinger, sample_hamiltonians
from .transitionless_framework import (
    basis_derivatives,
    boundary_check,
    boundary_overlaps,
    difference_step,
    f_matrix,
    gauge_connection,
    intermediate_h,
    numeric_transitionless,
    richardson_check,
)

__all__ = [
    "LandauZenerHamiltonian",
    "adiabatic_phase",
    "adiabatic_phase_track",
    "basis_derivatives",
    "boundary_check",
    "boundary_overlaps",
    "cd_hamiltonian",
    "difference_step",
    "f_matrix",
    "gauge_connection",
    "intermediate_h",
    "landau_zener_fixture",
    "numeric_transitionless",
    "propagate_lindblad",
    "propagate_schrodinger",
    "richardson_check",
    "sample_hamiltonians",
    "transitionless_hamiltonian",
]
