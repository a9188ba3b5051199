"""Unit tests for ExperimentApplicationService."""

from unittest.mock import AsyncMock

import pytest

from src.application.experiments.commands import FigureCommand, NoiseMonteCarloCommand, SimulateCommand
from src.application.experiments.results import ExperimentResult
from src.application.experiments.services.experiment_application_service import ExperimentApplicationService
from src.application.experiments.services.simulation import SimulationRequest
from src.application.shared.exceptions import ApplicationException
from src.tests.utils.factories import NoiseConfigFactory


@pytest.mark.unit
@pytest.mark.application
class TestExperimentApplicationService:
    """Test cases for ExperimentApplicationService."""

    @pytest.fixture
    def result(self):
        """A result as a handler would return it."""
        return ExperimentResult(experiment="simulate", location="out", files=["summary.txt"], summary={})

    @pytest.fixture
    def command_bus(self, result):
        """Mock command bus."""
        bus = AsyncMock()
        bus.send.return_value = result
        return bus

    @pytest.fixture
    def service(self, command_bus, mock_logger):
        """Service under test."""
        return ExperimentApplicationService(command_bus, mock_logger)

    async def test_simulate_sends_command(self, service, command_bus, result):
        """simulate wraps its arguments in a SimulateCommand."""
        # Arrange
        request = SimulationRequest(n_steps=256)

        # Act
        returned = await service.simulate(request, "out", config_echo={"n_steps": 256}, jobs=2)

        # Assert
        assert returned is result
        command = command_bus.send.call_args.args[0]
        assert isinstance(command, SimulateCommand)
        assert command.request is request
        assert command.config_echo == {"n_steps": 256}
        assert command.jobs == 2

    async def test_figure_sends_command(self, service, command_bus):
        """figure carries the number and the noise settings."""
        # Arrange
        noise = NoiseConfigFactory.create_config()

        # Act
        await service.figure(6, SimulationRequest(), noise, "out/fig6", n_runs=10)

        # Assert
        command = command_bus.send.call_args.args[0]
        assert isinstance(command, FigureCommand)
        assert command.experiment == "fig6"
        assert command.noise is noise
        assert command.n_runs == 10
        assert command.config_echo == {}

    async def test_noise_monte_carlo_sends_command(self, service, command_bus):
        """noise_monte_carlo sends a NoiseMonteCarloCommand."""
        await service.noise_monte_carlo(SimulationRequest(), NoiseConfigFactory.create_config(), "out", n_runs=3)

        command = command_bus.send.call_args.args[0]
        assert isinstance(command, NoiseMonteCarloCommand)
        assert command.n_runs == 3

    async def test_errors_are_logged_and_reraised(self, service, command_bus, mock_logger):
        """Handler failures reach the caller unchanged."""
        # Arrange
        command_bus.send.side_effect = ApplicationException("simulate failed")

        # Act & Assert
        with pytest.raises(ApplicationException, match="simulate failed"):
            await service.simulate(SimulationRequest(), "out")
        mock_logger.error.assert_called_once()
