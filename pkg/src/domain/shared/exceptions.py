"""Domain exception hierarchy."""


class DomainError(Exception):
    """Base class for all domain errors."""

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.message!r})"


class InvariantViolation(DomainError, ValueError):
    """Raised when a value object is constructed outside its invariants."""


class ConfigMissing(InvariantViolation):
    """Raised when an optional parameter needed by an operation is unset."""


class HermiticityViolation(DomainError):
    """Raised when a matrix expected to be Hermitian is not."""


class MaskAsymmetry(DomainError):
    """Raised when a coefficient mask is not symmetric under transpose."""


class BasisJump(DomainError):
    """Raised when a moving basis changes discontinuously between nearby times."""


class GammaUnderflow(DomainError):
    """Raised when the shortcut rotation angle is too small to close the frame."""


class CotangentSingularity(DomainError):
    """Raised when a λ/κ product would divide by sinθ or cosθ equal to zero."""


class NearDegeneracy(DomainError):
    """Raised when an instantaneous spectrum has a gap below tolerance."""


class HamiltonianEvaluationError(DomainError):
    """Raised when a Hamiltonian callable returns non-finite entries or fails."""


class PositivityViolation(DomainError):
    """Raised when a propagated density matrix acquires a negative eigenvalue."""


class ConvergenceWarning(UserWarning):
    """Attached to trajectories whose step-halved rerun disagrees."""

    def __init__(self, message: str, delta: float = 0.0):
        super().__init__(message)
        self.message = message
        self.delta = delta

    def __str__(self) -> str:
        return self.message
