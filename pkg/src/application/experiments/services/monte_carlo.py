"""Noise Monte Carlo fanned out over the sweep runner."""

import logging
from typing import Any, Dict, Tuple

from src.application.experiments.results import Table
from src.application.experiments.services.sweep_runner import SweepRunner
from src.domain.stirap.services.noise_model import simulate_noisy_run
from src.domain.stirap.value_objects import MonteCarloStats, NoiseConfig, NoisyRunResult, PulseParams

logger = logging.getLogger(__name__)

MONTE_CARLO_HEADER = ("run", "seed", "p3_final")

PUBLISHED_MEAN_P3 = 0.993


def _noisy_run(args: Tuple[PulseParams, NoiseConfig, int, int]) -> NoisyRunResult:
    params, cfg, run_index, n_steps = args
    return simulate_noisy_run(params, cfg, run_index, n_steps)


async def run_monte_carlo(
    runner: SweepRunner, params: PulseParams, cfg: NoiseConfig, n_runs: int, n_steps: int
) -> MonteCarloStats:
    """Same aggregate as the sequential domain harness, with runs spread over workers."""
    tasks = [(k, (params, cfg, k, n_steps)) for k in range(n_runs)]
    results = await runner.map(_noisy_run, tasks, label="monte carlo")
    stats = MonteCarloStats.from_runs([run for _, run in results])
    if stats.n_failed:
        logger.warning(f"Monte Carlo: {stats.n_failed} of {stats.n_runs} runs failed")
    return stats


def monte_carlo_table(name: str, stats: MonteCarloStats) -> Table:
    """One row per run in run order; failed runs leave ``p3_final`` empty."""
    failed = dict(stats.failures)
    values = iter(stats.p3_values)
    rows = []
    for run, seed in enumerate(stats.seeds):
        rows.append((run, seed, None if run in failed else next(values)))
    return Table(name=name, header=MONTE_CARLO_HEADER, rows=rows)


def monte_carlo_summary(stats: MonteCarloStats, cfg: NoiseConfig, window: float) -> Dict[str, Any]:
    """Aggregate, noise settings and the published mean; ``window`` is the pulse length T."""
    return {
        "n_runs": stats.n_runs,
        "n_failed": stats.n_failed,
        "mean_p3": stats.mean_p3,
        "std_p3": stats.std_p3,
        "min_p3": stats.min_p3,
        "amplitude": cfg.amplitude,
        "resample_interval": cfg.interval_for(window),
        "master_seed": cfg.master_seed,
        "noise_mode": cfg.mode,
        "channels": tuple(sorted(cfg.channels)),
        "published_mean_p3": PUBLISHED_MEAN_P3,
    }
