"""Handler for single configured runs."""

import asyncio
import time

from src.application.experiments.commands import SimulateCommand
from src.application.experiments.commands.handlers.experiment_handler import ExperimentHandler
from src.application.experiments.results import ExperimentOutput, ExperimentResult, Table
from src.application.experiments.services.simulation import TRAJECTORY_HEADER, run_simulation
from src.application.shared.command_bus import CommandHandler
from src.domain.shared.exceptions import DomainError
from src.domain.stirap.events import SimulationCompleted


class SimulateHandler(ExperimentHandler, CommandHandler[SimulateCommand, ExperimentResult]):
    """Propagates one request and writes ``trajectory.csv``, ``summary.txt`` and ``config.conf``."""

    async def handle(self, command: SimulateCommand) -> ExperimentResult:
        request = command.request
        self.logger.info(
            f"Simulating {request.mode} drive: {request.n_steps} steps, "
            f"gamma0={request.params.gamma0}, phi={request.params.phi:.6f}"
        )
        started = time.perf_counter()
        try:
            outcome = await asyncio.to_thread(run_simulation, request)
        except DomainError as e:
            raise await self._fail(command.experiment, e) from e

        await self.event_bus.publish(SimulationCompleted(
            experiment=command.experiment,
            mode=request.mode,
            p3_final=outcome.run_summary.p3_final,
            norm_drift=outcome.trajectory.norm_drift,
            n_steps=request.n_steps,
            duration_seconds=time.perf_counter() - started,
        ))

        output = ExperimentOutput(
            experiment=command.experiment,
            tables=[Table("trajectory", TRAJECTORY_HEADER, outcome.rows)],
            summary=outcome.summary,
        )
        return await self._write(output, command.output_dir, command.config_echo, "summary")
