"""Multiplicative drive noise and the Monte Carlo robustness harness."""

import logging

import numpy as np

from src.domain.driving.services.propagation import DEFAULT_STEPS, propagate_schrodinger
from src.domain.numerics import basis_state, derive_seed, time_grid
from src.domain.shared.exceptions import DomainError, InvariantViolation
from src.domain.stirap.services.drive_schedules import DriveSchedule, ShortcutDrive
from src.domain.stirap.value_objects.modified_drive import DriveColumns
from src.domain.stirap.value_objects.noise import (
    MonteCarloStats,
    NoiseConfig,
    NoiseTrack,
    NoisyRunResult,
)
from src.domain.stirap.value_objects.pulse_params import PulseParams

logger = logging.getLogger(__name__)


class NoisyDrive(DriveSchedule):
    """A drive whose amplitude, mixing angle and detuning carry multiplicative noise.

    Pump and Stokes amplitudes are rebuilt from the perturbed polar form;
    the phases are left untouched.
    """

    mode = "noisy"

    def __init__(self, base: DriveSchedule, track: NoiseTrack):
        super().__init__(base.params)
        self.base = base
        self.track = track

    def columns(self, times) -> DriveColumns:
        times = np.asarray(times, dtype=float)
        clean = self.base.columns(times)
        omega0 = clean.omega0 * (1.0 + self.track.values("omega0", times))
        theta_tilde = clean.theta_tilde * (1.0 + self.track.values("theta", times))
        return DriveColumns(
            times=times,
            omega_p=omega0 * np.sin(theta_tilde),
            omega_s=omega0 * np.cos(theta_tilde),
            phase_p=clean.phase_p,
            phase_s=clean.phase_s,
            delta=clean.delta * (1.0 + self.track.values("delta", times)),
            theta=clean.theta,
            gamma=clean.gamma,
        )


def noisy_drive(base: DriveSchedule, cfg: NoiseConfig, run_index: int) -> DriveSchedule:
    """Noisy copy of ``base`` for run ``run_index``; ``base`` itself when the noise is silent."""
    if cfg.is_silent:
        return base
    p = base.params
    return NoisyDrive(base, NoiseTrack.draw(cfg, run_index, p.t_start, p.t_end))


def simulate_noisy_run(
    p: PulseParams, cfg: NoiseConfig, run_index: int, n_steps: int = DEFAULT_STEPS
) -> NoisyRunResult:
    """Propagate ``|1>`` under the noisy shortcut drive of one run.

    Propagation failures are captured in the result rather than raised.
    """
    seed = derive_seed(int(cfg.master_seed), run_index)
    try:
        drive = noisy_drive(ShortcutDrive(p), cfg, run_index)
        trajectory = propagate_schrodinger(
            drive, basis_state(0), time_grid(p.t_start, p.t_end, n_steps), record_stride=n_steps
        )
    except DomainError as e:
        logger.warning(f"Monte Carlo run {run_index} (seed {seed}) failed: {e}")
        return NoisyRunResult(run=run_index, seed=seed, error=str(e))
    return NoisyRunResult(run=run_index, seed=seed, p3_final=trajectory.p3_final)


def monte_carlo(
    p: PulseParams, cfg: NoiseConfig, n_runs: int, n_steps: int = DEFAULT_STEPS
) -> MonteCarloStats:
    """Run ``n_runs`` independent noisy propagations sequentially and aggregate them."""
    if n_runs < 1:
        raise InvariantViolation(f"n_runs must be at least 1, got {n_runs}")
    runs = [simulate_noisy_run(p, cfg, k, n_steps) for k in range(n_runs)]
    stats = MonteCarloStats.from_runs(runs)
    logger.info(
        f"Monte Carlo: {stats.n_succeeded}/{stats.n_runs} runs, "
        f"mean P3 {stats.mean_p3:.6f}, min {stats.min_p3:.6f}"
    )
    return stats
