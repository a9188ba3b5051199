"""Experiment application service."""

import logging
from typing import Any, Dict, Optional

from src.application.experiments.commands import FigureCommand, NoiseMonteCarloCommand, SimulateCommand
from src.application.experiments.results import ExperimentResult
from src.application.experiments.services.simulation import SimulationRequest
from src.application.shared.command_bus import CommandBus
from src.domain.stirap.value_objects import NoiseConfig


class ExperimentApplicationService:
    """Entry point for the presentation layer: builds commands and sends them on the bus."""

    def __init__(self, command_bus: CommandBus, logger: logging.Logger):
        self.command_bus = command_bus
        self.logger = logger

    async def simulate(
        self,
        request: SimulationRequest,
        output_dir: str,
        config_echo: Optional[Dict[str, Any]] = None,
        jobs: int = 1,
    ) -> ExperimentResult:
        """Propagate one run and write its trajectory and summary.

        Args:
            request: The validated run
            output_dir: Directory receiving the result files
            config_echo: Effective configuration written next to the results
            jobs: Worker count; a single run always uses one

        Returns:
            Written files and the summary values
        """
        command = SimulateCommand(
            request=request, output_dir=output_dir, config_echo=dict(config_echo or {}), jobs=jobs
        )
        try:
            return await self.command_bus.send(command)
        except Exception as e:
            self.logger.error(f"Error in simulate: {e}")
            raise

    async def figure(
        self,
        number: int,
        request: SimulationRequest,
        noise: NoiseConfig,
        output_dir: str,
        n_runs: int = 100,
        config_echo: Optional[Dict[str, Any]] = None,
        jobs: int = 1,
    ) -> ExperimentResult:
        """Regenerate the data behind figure ``number``."""
        command = FigureCommand(
            number=number,
            request=request,
            noise=noise,
            output_dir=output_dir,
            n_runs=n_runs,
            config_echo=dict(config_echo or {}),
            jobs=jobs,
        )
        try:
            return await self.command_bus.send(command)
        except Exception as e:
            self.logger.error(f"Error in figure {number}: {e}")
            raise

    async def noise_monte_carlo(
        self,
        request: SimulationRequest,
        noise: NoiseConfig,
        output_dir: str,
        n_runs: int = 100,
        config_echo: Optional[Dict[str, Any]] = None,
        jobs: int = 1,
    ) -> ExperimentResult:
        command = NoiseMonteCarloCommand(
            request=request,
            noise=noise,
            output_dir=output_dir,
            n_runs=n_runs,
            config_echo=dict(config_echo or {}),
            jobs=jobs,
        )
        try:
            return await self.command_bus.send(command)
        except Exception as e:
            self.logger.error(f"Error in noise Monte Carlo: {e}")
            raise
