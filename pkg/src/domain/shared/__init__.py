"""Shared domain elements used across all bounded contexts."""

from .domain_event import DomainEvent
from .exceptions import (
    BasisJump,
    ConfigMissing,
    ConvergenceWarning,
    CotangentSingularity,
    DomainError,
    GammaUnderflow,
    HamiltonianEvaluationError,
    HermiticityViolation,
    InvariantViolation,
    MaskAsymmetry,
    NearDegeneracy,
    PositivityViolation,
)

__all__ = [
    "BasisJump",
    "ConfigMissing",
    "ConvergenceWarning",
    "CotangentSingularity",
    "DomainError",
    "DomainEvent",
    "GammaUnderflow",
    "HamiltonianEvaluationError",
    "HermiticityViolation",
    "InvariantViolation",
    "MaskAsymmetry",
    "NearDegeneracy",
    "PositivityViolation",
]
