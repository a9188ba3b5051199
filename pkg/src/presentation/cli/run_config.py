"""Run configuration DTO."""

import math
from typing import Any, Dict, FrozenSet, Optional

from pydantic import BaseModel, ConfigDict, field_validator

from src.application.experiments.services.simulation import SimulationRequest
from src.domain.driving.value_objects import LindbladParams
from src.domain.stirap.value_objects import NoiseConfig, PulseParams
from src.presentation.cli.config_loader import evaluate_number

NUMERIC_FIELDS = (
    "T", "tau", "tau_c", "gamma0", "phi", "omega0_ref", "chi", "T0",
    "gamma1", "gamma3", "gamma_a", "noise_amplitude", "noise_interval",
)

ECHO_EXCLUDE = {"output"}


class RunConfig(BaseModel):
    """Every key a run config file may set; unknown keys are rejected.

    Pulse keys carry the window length ``T`` as unit. ``gamma1``/``gamma3``
    are absolute rates unless ``rates_relative`` is set, in which case they
    multiply the peak drive amplitude.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    # Pulse shape
    T: float = 1.0
    tau: float = 0.115
    tau_c: float = 0.3
    gamma0: float = 0.1
    phi: float = math.pi / 5
    omega0_ref: float = 16.0
    chi: Optional[float] = None
    T0: Optional[float] = None
    n: Optional[int] = None

    # Integration
    mode: str = "shortcut"
    envelope: str = "constant"
    n_steps: int = 4096
    record_stride: int = 8
    check_convergence: bool = False

    # Decoherence
    gamma1: float = 0.0
    gamma3: float = 0.0
    rates_relative: bool = False
    gamma_a: float = 0.5

    # Noise
    noise_amplitude: float = 0.1
    noise_interval: Optional[float] = None
    noise_channels: str = "omega0,theta,delta"
    noise_mode: str = "independent"
    noise_runs: int = 100
    seed: int = 0

    experiment: str = "run"
    output: Optional[str] = None

    @field_validator(*NUMERIC_FIELDS, mode="before")
    @classmethod
    def _pi_expressions(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip():
            return evaluate_number(value)
        return value

    @property
    def channels(self) -> FrozenSet[str]:
        return frozenset(c for c in self.noise_channels.replace(",", " ").split() if c)

    def pulse_params(self) -> PulseParams:
        return PulseParams(
            T=self.T,
            tau=self.tau,
            tau_c=self.tau_c,
            gamma0=self.gamma0,
            phi=self.phi,
            omega0_ref=self.omega0_ref,
            chi=self.chi,
            T0=self.T0,
            n=self.n,
        )

    def noise_config(self) -> NoiseConfig:
        return NoiseConfig(
            amplitude=self.noise_amplitude,
            resample_interval=self.noise_interval,
            master_seed=self.seed,
            channels=self.channels,
            mode=self.noise_mode,
        )

    def lindblad_params(self) -> LindbladParams:
        return LindbladParams(gamma1=self.gamma1, gamma3=self.gamma3)

    def simulation_request(self) -> SimulationRequest:
        return SimulationRequest(
            params=self.pulse_params(),
            mode=self.mode,
            envelope=self.envelope,
            n_steps=self.n_steps,
            record_stride=self.record_stride,
            gamma1=self.gamma1,
            gamma3=self.gamma3,
            rates_relative=self.rates_relative,
            gamma_a=self.gamma_a,
            check_convergence=self.check_convergence,
        )

    def echo(self) -> Dict[str, Any]:
        """Effective configuration for the provenance file; unset optionals are left out."""
        data = self.model_dump(exclude=ECHO_EXCLUDE)
        return {key: value for key, value in data.items() if value is not None}

    @classmethod
    def from_sources(
        cls, file_values: Dict[str, str], overrides: Dict[str, str], seed: Optional[int] = None
    ) -> "RunConfig":
        """Merge file values, ``--set`` overrides and ``--seed``, later sources winning."""
        merged: Dict[str, Any] = {**file_values, **overrides}
        if seed is not None:
            merged["seed"] = seed
        merged = {key: (None if value == "" else value) for key, value in merged.items()}
        return cls(**merged)
