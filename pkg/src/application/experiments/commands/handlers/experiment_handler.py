"""Shared write-out and failure handling for experiment command handlers."""

import logging
from typing import Any, Callable, Dict, List

from src.application.experiments.results import ExperimentOutput, ExperimentResult
from src.application.experiments.services.sweep_runner import SweepRunner
from src.application.shared.event_bus import EventBus
from src.application.shared.exceptions import ApplicationException
from src.domain.shared.exceptions import DomainError
from src.domain.stirap.events import ExperimentWritten, PropagationFailed
from src.domain.stirap.repositories.result_repository import ResultRepository

CONFIG_ECHO_NAME = "config"


class ExperimentHandler:
    """Base for handlers that compute an :class:`ExperimentOutput` and persist it."""

    def __init__(
        self,
        repository_factory: Callable[[str], ResultRepository],
        runner_factory: Callable[[int], SweepRunner],
        event_bus: EventBus,
        logger: logging.Logger,
    ):
        self.repository_factory = repository_factory
        self.runner_factory = runner_factory
        self.event_bus = event_bus
        self.logger = logger

    async def _write(
        self, output: ExperimentOutput, output_dir: str, config_echo: Dict[str, Any], summary_name: str
    ) -> ExperimentResult:
        repository = self.repository_factory(output_dir)
        files: List[str] = []
        for table in output.tables:
            files.append(await repository.save_table(table.name, table.header, table.rows))
        files.append(await repository.save_summary(summary_name, output.summary))
        files.append(await repository.save_config_echo(CONFIG_ECHO_NAME, config_echo))

        await self.event_bus.publish(ExperimentWritten(
            experiment=output.experiment,
            location=output_dir,
            files=tuple(files),
        ))
        self.logger.info(f"{output.experiment}: wrote {len(files)} files to {output_dir}")
        return ExperimentResult(
            experiment=output.experiment,
            location=output_dir,
            files=files,
            summary=dict(output.summary),
        )

    async def _fail(self, experiment: str, error: DomainError) -> ApplicationException:
        """Report a numerical failure and build the exception to raise."""
        self.logger.error(f"{experiment} failed: {error}")
        await self.event_bus.publish(PropagationFailed(
            experiment=experiment,
            error_type=error.__class__.__name__,
            error_message=str(error),
        ))
        return ApplicationException(f"{experiment} failed: {error}", cause=error)
