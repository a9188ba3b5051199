"""Single-run simulation shared by the simulate command and the figure sweeps.

Everything here is a plain function of a frozen request so that sweep points
can be shipped to worker processes and rerun bit-for-bit.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy.integrate import trapezoid

from src.domain.driving.services import propagate_lindblad, propagate_schrodinger
from src.domain.driving.value_objects import LindbladParams, Trajectory
from src.domain.numerics import basis_state, time_grid
from src.domain.shared.exceptions import InvariantViolation
from src.domain.stirap.services import figures_of_merit as fom
from src.domain.stirap.services.drive_schedules import DriveSchedule, ShortcutDrive, build_drive
from src.domain.stirap.services.noise_model import noisy_drive
from src.domain.stirap.value_objects import NoiseConfig, PulseParams, RunSummary

logger = logging.getLogger(__name__)

TRAJECTORY_HEADER = ("t", "P1", "P2", "P3", "omega_p", "omega_s", "delta", "theta", "gamma")

PUBLISHED_SHORTCUT = {
    "published_p3_final": 0.997,
    "published_t_omega_max": 16.0,
    "published_area_over_pi": 4.1,
}


@dataclass(frozen=True)
class SimulationRequest:
    """One propagation of ``|1>`` over the pulse window.

    With ``rates_relative`` the emission rates are read as multiples of the
    largest drive amplitude on the grid.
    """

    params: PulseParams = field(default_factory=PulseParams)
    mode: str = "shortcut"
    envelope: str = "constant"
    n_steps: int = 4096
    record_stride: int = 8
    gamma1: float = 0.0
    gamma3: float = 0.0
    rates_relative: bool = False
    gamma_a: float = 0.5
    check_convergence: bool = False
    noise: Optional[NoiseConfig] = None
    run_index: int = 0

    def __post_init__(self):
        if self.mode not in ("shortcut", "original"):
            raise InvariantViolation(f"mode must be 'shortcut' or 'original', got '{self.mode}'")
        if int(self.n_steps) != self.n_steps or self.n_steps < 1:
            raise InvariantViolation(f"n_steps must be a positive integer, got {self.n_steps}")
        if int(self.record_stride) != self.record_stride or self.record_stride < 1:
            raise InvariantViolation(f"record_stride must be a positive integer, got {self.record_stride}")
        if not (math.isfinite(self.gamma_a) and self.gamma_a >= 0):
            raise InvariantViolation(f"gamma_a must be non-negative, got {self.gamma_a}")
        if self.run_index < 0:
            raise InvariantViolation(f"run_index must be non-negative, got {self.run_index}")
        # Rate validation lives on LindbladParams.
        LindbladParams(gamma1=self.gamma1, gamma3=self.gamma3)

    @property
    def is_open(self) -> bool:
        return self.gamma1 > 0 or self.gamma3 > 0

    def with_updates(self, **changes: Any) -> "SimulationRequest":
        return replace(self, **changes)

    def with_params(self, **changes: Any) -> "SimulationRequest":
        return replace(self, params=self.params.with_updates(**changes))


@dataclass(frozen=True, eq=False)
class SimulationOutcome:
    request: SimulationRequest
    trajectory: Trajectory
    rows: List[Tuple[float, ...]]
    run_summary: RunSummary
    summary: Dict[str, Any]
    lindblad: LindbladParams


def _drive_for(request: SimulationRequest) -> DriveSchedule:
    drive = build_drive(request.params, request.mode, request.envelope)
    if request.noise is not None:
        drive = noisy_drive(drive, request.noise, request.run_index)
    return drive


def _rates(request: SimulationRequest, amplitude_max: float) -> LindbladParams:
    if request.rates_relative:
        return LindbladParams.from_ratios(amplitude_max, request.gamma1, request.gamma3)
    return LindbladParams(gamma1=request.gamma1, gamma3=request.gamma3)


def trajectory_rows(trajectory: Trajectory, drive: DriveSchedule) -> List[Tuple[float, ...]]:
    """Rows of the trajectory table: populations next to the drive at each recorded time."""
    columns = drive.columns(trajectory.times)
    populations = trajectory.populations
    return [
        (
            float(t),
            float(populations[k, 0]),
            float(populations[k, 1]),
            float(populations[k, 2]),
            float(columns.omega_p[k]),
            float(columns.omega_s[k]),
            float(columns.delta[k]),
            float(columns.theta[k]),
            float(columns.gamma[k]),
        )
        for k, t in enumerate(trajectory.times)
    ]


def run_simulation(request: SimulationRequest) -> SimulationOutcome:
    """Propagate one request and collect its table rows and figures of merit.

    Raises:
        DomainError: on any numerical failure of the drive or the propagation
    """
    p = request.params
    drive = _drive_for(request)
    grid = time_grid(p.t_start, p.t_end, request.n_steps)

    amplitude = drive.columns(grid).omega0
    k_max = int(np.argmax(amplitude))
    amplitude_max = float(amplitude[k_max])
    area = fom.pulse_area_from_amplitude(grid, amplitude)
    lindblad = _rates(request, amplitude_max)

    psi0 = basis_state(0)
    if lindblad.is_closed:
        trajectory = propagate_schrodinger(
            drive, psi0, grid,
            record_stride=request.record_stride,
            check_convergence=request.check_convergence,
        )
    else:
        trajectory = propagate_lindblad(
            drive, np.outer(psi0, psi0.conj()), lindblad, grid, record_stride=request.record_stride
        )

    if trajectory.convergence_warning is not None:
        logger.warning(f"{request.mode} run did not converge: {trajectory.convergence_warning}")

    p2_numeric = float(trapezoid(trajectory.populations[:, 1], trajectory.times)) / p.T
    p2_value = fom.p2_bar(p.gamma0) if request.mode == ShortcutDrive.mode else p2_numeric
    t_omega_max = amplitude_max * p.T

    run_summary = RunSummary(
        area_over_pi=area.over_pi,
        t_omega_max=t_omega_max,
        p2_bar=min(max(p2_value, 0.0), 1.0),
        epsilon=fom.epsilon(request.gamma_a, max(p2_value, 0.0), t_omega_max),
        p3_final=min(max(trajectory.p3_final, 0.0), 1.0),
        fidelity_sq=min(max(trajectory.fidelity_sq, 0.0), 1.0),
    )

    summary: Dict[str, Any] = {
        "p3_final": run_summary.p3_final,
        "area_over_pi": run_summary.area_over_pi,
        "t_omega_max_numeric": t_omega_max,
        "t_omega_max_eq36": fom.closed_form_peak(p) * p.T,
        "p2_bar": run_summary.p2_bar,
        "epsilon": run_summary.epsilon,
        "norm_drift": trajectory.norm_drift,
        "fidelity_sq": run_summary.fidelity_sq,
        "deviation": run_summary.deviation,
        "t_omega_max_center": fom.center_amplitude(p) * p.T,
        "t_argmax": float(grid[k_max]),
        "p2_bar_numeric": p2_numeric,
        "mode": request.mode,
        "n_steps": request.n_steps,
        "converged": trajectory.converged,
        "gamma1": lindblad.gamma1,
        "gamma3": lindblad.gamma3,
    }
    if trajectory.convergence_warning is not None:
        summary["convergence_delta"] = trajectory.convergence_warning.delta
    if trajectory.min_eigenvalue is not None:
        summary["min_eigenvalue"] = trajectory.min_eigenvalue
    if request.mode == ShortcutDrive.mode:
        summary.update(PUBLISHED_SHORTCUT)

    logger.debug(f"{request.mode} run: P3={run_summary.p3_final:.6f}, area={area.over_pi:.4f} pi")

    return SimulationOutcome(
        request=request,
        trajectory=trajectory,
        rows=trajectory_rows(trajectory, drive),
        run_summary=run_summary,
        summary=summary,
        lindblad=lindblad,
    )
