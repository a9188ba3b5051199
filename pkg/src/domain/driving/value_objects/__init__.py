"""Value objects of the generic transitionless-driving machinery."""

from .adiabatic_phase import AdiabaticPhase
from .coefficient_mask import CoefficientMask
from .moving_basis import BasisSample, MovingBasis
from .trajectory import LINDBLAD, UNITARY, LindbladParams, Trajectory

__all__ = [
    "AdiabaticPhase",
    "BasisSample",
    "CoefficientMask",
    "LINDBLAD",
    "LindbladParams",
    "MovingBasis",
    "Trajectory",
    "UNITARY",
]
