"""Dependency injection container."""

import logging

from dependency_injector import containers, providers

from src.application.experiments.commands.handlers import (
    FigureHandler,
    NoiseMonteCarloHandler,
    SimulateHandler,
)
from src.application.experiments.events.handlers.metrics_event_handler import MetricsEventHandler
from src.application.experiments.services.experiment_application_service import ExperimentApplicationService
from src.application.experiments.services.sweep_runner import capped_runner
from src.application.shared.simple_command_bus import SimpleCommandBus
from src.application.shared.simple_event_bus import SimpleEventBus
from src.config.settings import Settings
from src.infrastructure.monitoring.metrics_collector import MetricsCollector
from src.infrastructure.persistence.repositories.file_system_result_repository import FileSystemResultRepository

logger = logging.getLogger(__name__)


class Container(containers.DeclarativeContainer):
    """Dependency injection container."""

    # Settings
    settings = providers.Singleton(
        Settings
    )

    # Monitoring
    metrics_collector = providers.Singleton(
        MetricsCollector
    )

    # Persistence, one repository per output directory
    result_repository = providers.Factory(
        FileSystemResultRepository
    )

    # Worker pools, capped by STIRAP_MAX_JOBS
    sweep_runner = providers.Factory(
        capped_runner,
        max_jobs=settings.provided.execution.max_jobs,
    )

    # Buses
    event_bus = providers.Singleton(
        SimpleEventBus
    )

    command_bus = providers.Singleton(
        SimpleCommandBus
    )

    # Command handlers
    simulate_handler = providers.Factory(
        SimulateHandler,
        repository_factory=result_repository.provider,
        runner_factory=sweep_runner.provider,
        event_bus=event_bus,
        logger=providers.Factory(lambda: logging.getLogger('simulate_handler'))
    )

    figure_handler = providers.Factory(
        FigureHandler,
        repository_factory=result_repository.provider,
        runner_factory=sweep_runner.provider,
        event_bus=event_bus,
        logger=providers.Factory(lambda: logging.getLogger('figure_handler'))
    )

    noise_monte_carlo_handler = providers.Factory(
        NoiseMonteCarloHandler,
        repository_factory=result_repository.provider,
        runner_factory=sweep_runner.provider,
        event_bus=event_bus,
        logger=providers.Factory(lambda: logging.getLogger('noise_monte_carlo_handler'))
    )

    # Event handlers
    metrics_event_handler = providers.Factory(
        MetricsEventHandler,
        metrics=metrics_collector,
        logger=providers.Factory(lambda: logging.getLogger('metrics_event_handler'))
    )

    # Application services
    experiment_application_service = providers.Factory(
        ExperimentApplicationService,
        command_bus=command_bus,
        logger=providers.Factory(lambda: logging.getLogger('experiment_application_service'))
    )

    @staticmethod
    def bootstrap(container):
        """Bootstrap the container by registering handlers with buses."""
        from src.application.experiments.commands import (
            FigureCommand,
            NoiseMonteCarloCommand,
            SimulateCommand,
        )
        from src.domain.stirap.events import (
            ExperimentWritten,
            MonteCarloCompleted,
            PropagationFailed,
            SimulationCompleted,
        )

        command_bus = container.command_bus()
        event_bus = container.event_bus()

        command_bus.register_handler(SimulateCommand, container.simulate_handler())
        command_bus.register_handler(FigureCommand, container.figure_handler())
        command_bus.register_handler(NoiseMonteCarloCommand, container.noise_monte_carlo_handler())

        metrics_handler = container.metrics_event_handler()
        for event_type in (SimulationCompleted, MonteCarloCompleted, PropagationFailed, ExperimentWritten):
            event_bus.register_handler(event_type, metrics_handler)

        logging.getLogger(__name__).debug("Handlers registered with buses")
