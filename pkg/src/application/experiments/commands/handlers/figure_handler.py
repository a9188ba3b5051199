"""Handler for figure data regeneration."""

import time

from src.application.experiments.commands import FigureCommand
from src.application.experiments.commands.handlers.experiment_handler import ExperimentHandler
from src.application.experiments.results import ExperimentResult
from src.application.experiments.services.figures import FigureInputs, figure_builder
from src.application.shared.command_bus import CommandHandler
from src.domain.shared.exceptions import DomainError
from src.domain.stirap.events import MonteCarloCompleted, SimulationCompleted


class FigureHandler(ExperimentHandler, CommandHandler[FigureCommand, ExperimentResult]):
    """Runs the builder for one figure and writes its tables and ``figN_summary.txt``."""

    async def handle(self, command: FigureCommand) -> ExperimentResult:
        experiment = command.experiment
        builder = figure_builder(command.number)
        runner = self.runner_factory(command.jobs)
        inputs = FigureInputs(base=command.request, noise=command.noise, n_runs=command.n_runs)

        self.logger.info(f"Building {experiment} with {runner.max_workers} worker(s)")
        started = time.perf_counter()
        try:
            output = await builder(inputs, runner)
        except DomainError as e:
            raise await self._fail(experiment, e) from e
        elapsed = time.perf_counter() - started

        summary = output.summary
        if "mean_p3" in summary:
            await self.event_bus.publish(MonteCarloCompleted(
                experiment=experiment,
                n_runs=summary["n_runs"],
                n_failed=summary["n_failed"],
                mean_p3=summary["mean_p3"],
                min_p3=summary["min_p3"],
                duration_seconds=elapsed,
            ))
        elif "p3_final" in summary:
            await self.event_bus.publish(SimulationCompleted(
                experiment=experiment,
                mode=summary.get("mode", ""),
                p3_final=summary["p3_final"],
                norm_drift=summary.get("norm_drift", 0.0),
                n_steps=command.request.n_steps,
                duration_seconds=elapsed,
            ))

        return await self._write(output, command.output_dir, command.config_echo, f"{experiment}_summary")
