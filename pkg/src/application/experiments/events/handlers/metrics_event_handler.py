"""Feeds experiment events into the metrics collector."""

import logging
from typing import Any

from src.application.shared.event_bus import EventHandler
from src.domain.shared.domain_event import DomainEvent
from src.domain.stirap.events import (
    ExperimentWritten,
    MonteCarloCompleted,
    PropagationFailed,
    SimulationCompleted,
)


class MetricsEventHandler(EventHandler[DomainEvent]):
    """Counts runs, failures and written files; observes wall-clock durations.

    ``metrics`` needs ``increment_counter``, ``observe_histogram`` and ``set_gauge``.
    """

    def __init__(self, metrics: Any, logger: logging.Logger):
        self.metrics = metrics
        self.logger = logger

    async def handle(self, event: DomainEvent) -> None:
        if isinstance(event, SimulationCompleted):
            self.metrics.increment_counter("simulations_completed")
            self.metrics.observe_histogram("simulation_duration_seconds", event.duration_seconds)
            self.metrics.set_gauge("last_p3_final", event.p3_final)
        elif isinstance(event, MonteCarloCompleted):
            self.metrics.increment_counter("monte_carlo_batches")
            self.metrics.increment_counter("monte_carlo_runs", event.n_runs)
            self.metrics.increment_counter("monte_carlo_failed_runs", event.n_failed)
            self.metrics.observe_histogram("monte_carlo_duration_seconds", event.duration_seconds)
            self.metrics.set_gauge("last_mean_p3", event.mean_p3)
        elif isinstance(event, PropagationFailed):
            self.metrics.increment_counter("propagation_failures")
            self.logger.debug(f"Recorded {event.error_type} for {event.experiment}")
        elif isinstance(event, ExperimentWritten):
            self.metrics.increment_counter("files_written", len(event.files))
        else:
            self.logger.debug(f"Ignoring {event.__class__.__name__}")
