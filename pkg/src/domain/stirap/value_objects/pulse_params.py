"""Pulse parameter value object."""

import math
from dataclasses import asdict, dataclass, replace
from typing import Any, Dict, Optional

from src.domain.shared.exceptions import InvariantViolation

# Slack on the admissible-range bounds so that decimal config values such as
# 0.12 or pi/4 land inside closed intervals.
_BOUND_SLACK = 1e-12


@dataclass(frozen=True)
class PulseParams:
    """Shape parameters of one run, in units where the window length is ``T``.

    The window is the symmetric interval ``[-T/2, T/2]``. ``chi``, ``T0`` and
    ``n`` only describe the optional super-Gaussian reference envelope.
    """

    T: float = 1.0
    tau: float = 0.115
    tau_c: float = 0.3
    gamma0: float = 0.1
    phi: float = math.pi / 5
    omega0_ref: float = 16.0
    chi: Optional[float] = None
    T0: Optional[float] = None
    n: Optional[int] = None

    def __post_init__(self):
        for name in ("T", "tau", "tau_c", "gamma0", "phi", "omega0_ref"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise InvariantViolation(f"{name} must be a finite number, got {value!r}")

        T = self.T
        if T <= 0:
            raise InvariantViolation(f"T must be positive, got {T}")
        if not 0 < self.tau <= 0.12 * T + _BOUND_SLACK:
            raise InvariantViolation(f"tau must satisfy 0 < tau <= 0.12*T, got {self.tau}")
        if not 0.2 * T < self.tau_c <= 0.3 * T + _BOUND_SLACK:
            raise InvariantViolation(f"tau_c must satisfy 0.2*T < tau_c <= 0.3*T, got {self.tau_c}")
        if not 0 < self.gamma0 < 0.5:
            raise InvariantViolation(f"gamma0 must satisfy 0 < gamma0 < 0.5, got {self.gamma0}")
        if not 0 < self.phi <= math.pi / 4 + _BOUND_SLACK:
            raise InvariantViolation(f"phi must satisfy 0 < phi <= pi/4, got {self.phi}")
        if self.omega0_ref < 0:
            raise InvariantViolation(f"omega0_ref must be non-negative, got {self.omega0_ref}")

        if self.chi is not None and not (math.isfinite(self.chi) and self.chi > 0):
            raise InvariantViolation(f"chi must be positive, got {self.chi}")
        if self.T0 is not None and not (math.isfinite(self.T0) and self.T0 > 0):
            raise InvariantViolation(f"T0 must be positive, got {self.T0}")
        if self.n is not None and (int(self.n) != self.n or self.n < 1):
            raise InvariantViolation(f"n must be a positive integer, got {self.n}")

    @property
    def t_start(self) -> float:
        return -0.5 * self.T

    @property
    def t_end(self) -> float:
        return 0.5 * self.T

    @property
    def has_envelope(self) -> bool:
        """Whether the super-Gaussian envelope is fully specified."""
        return self.chi is not None and self.T0 is not None and self.n is not None

    def with_updates(self, **changes: Any) -> "PulseParams":
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PulseParams":
        known = {key: data[key] for key in cls.__dataclass_fields__ if key in data}
        return cls(**known)
