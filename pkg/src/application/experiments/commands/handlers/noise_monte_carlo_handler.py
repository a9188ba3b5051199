"""Handler for the noise Monte Carlo."""

import time

from src.application.experiments.commands import NoiseMonteCarloCommand
from src.application.experiments.commands.handlers.experiment_handler import ExperimentHandler
from src.application.experiments.results import ExperimentOutput, ExperimentResult
from src.application.experiments.services.monte_carlo import (
    monte_carlo_summary,
    monte_carlo_table,
    run_monte_carlo,
)
from src.application.shared.command_bus import CommandHandler
from src.domain.shared.exceptions import DomainError
from src.domain.stirap.events import MonteCarloCompleted


class NoiseMonteCarloHandler(ExperimentHandler, CommandHandler[NoiseMonteCarloCommand, ExperimentResult]):
    """Writes ``monte_carlo.csv`` (``run,seed,p3_final``) and ``monte_carlo_summary.txt``."""

    async def handle(self, command: NoiseMonteCarloCommand) -> ExperimentResult:
        request = command.request
        runner = self.runner_factory(command.jobs)
        self.logger.info(
            f"Monte Carlo: {command.n_runs} runs, amplitude {command.noise.amplitude}, "
            f"seed {command.noise.master_seed}"
        )
        started = time.perf_counter()
        try:
            stats = await run_monte_carlo(runner, request.params, command.noise, command.n_runs, request.n_steps)
        except DomainError as e:
            raise await self._fail(command.experiment, e) from e

        await self.event_bus.publish(MonteCarloCompleted(
            experiment=command.experiment,
            n_runs=stats.n_runs,
            n_failed=stats.n_failed,
            mean_p3=stats.mean_p3,
            min_p3=stats.min_p3,
            duration_seconds=time.perf_counter() - started,
        ))

        output = ExperimentOutput(
            experiment=command.experiment,
            tables=[monte_carlo_table("monte_carlo", stats)],
            summary=monte_carlo_summary(stats, command.noise, request.params.T),
        )
        return await self._write(output, command.output_dir, command.config_echo, "monte_carlo_summary")
