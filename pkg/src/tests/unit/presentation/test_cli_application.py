"""Unit tests for the command-line application."""

from unittest.mock import AsyncMock

import pytest

from src.application.experiments.results import ExperimentResult
from src.application.shared.exceptions import ApplicationException
from src.config.dependencies import Container
from src.domain.shared.exceptions import BasisJump
from src.presentation.cli.cli_application import (
    EXIT_CONFIG,
    EXIT_INTERNAL,
    EXIT_NUMERIC,
    EXIT_OK,
    CliApplication,
    parse_args,
)


@pytest.mark.unit
@pytest.mark.presentation
class TestParseArgs:
    """Test cases for the argument parser."""

    def test_figure_arguments(self):
        """figure takes a number and the common options."""
        args = parse_args(["figure", "3", "--jobs", "4", "--set", "n_steps=1024", "--set", "seed=1"])

        assert args.command == "figure"
        assert args.number == 3
        assert args.jobs == 4
        assert args.overrides == ["n_steps=1024", "seed=1"]

    def test_unknown_figure_number(self):
        """argparse rejects figures that do not exist."""
        with pytest.raises(SystemExit):
            parse_args(["figure", "9"])

    def test_command_required(self):
        """A subcommand is mandatory."""
        with pytest.raises(SystemExit):
            parse_args([])


@pytest.mark.unit
@pytest.mark.presentation
class TestCliApplication:
    """Test cases for CliApplication."""

    @pytest.fixture
    def app(self):
        """Application on a bootstrapped container with a mocked service."""
        container = Container()
        Container.bootstrap(container)
        application = CliApplication(container)
        application.service = AsyncMock()
        result = ExperimentResult(experiment="simulate", location="out", files=["out/summary.txt"], summary={})
        application.service.simulate.return_value = result
        application.service.figure.return_value = result
        application.service.noise_monte_carlo.return_value = result
        return application

    async def test_simulate_ok(self, app):
        """A valid run dispatches to simulate and exits 0."""
        # Act
        code = await app.run(parse_args(["simulate", "--set", "n_steps=512", "--out", "out"]))

        # Assert
        assert code == EXIT_OK
        request = app.service.simulate.call_args.args[0]
        assert request.n_steps == 512
        assert app.service.simulate.call_args.args[1] == "out"
        assert app.service.simulate.call_args.kwargs["config_echo"]["n_steps"] == 512

    async def test_config_file_and_seed(self, app, tmp_path):
        """File values, overrides and --seed reach the noise settings."""
        # Arrange
        path = tmp_path / "run.conf"
        path.write_text("noise_amplitude = 0.05\nnoise_runs = 10\n", encoding="utf-8")

        # Act
        code = await app.run(parse_args(["noise-mc", "--config", str(path), "--seed", "99", "--out", "mc"]))

        # Assert
        assert code == EXIT_OK
        _, noise, output_dir = app.service.noise_monte_carlo.call_args.args
        assert noise.amplitude == 0.05
        assert noise.master_seed == 99
        assert output_dir == "mc"
        assert app.service.noise_monte_carlo.call_args.kwargs["n_runs"] == 10

    async def test_default_output_dir(self, app):
        """Without --out results go under the configured root."""
        # Act
        code = await app.run(parse_args(["figure", "7"]))

        # Assert
        assert code == EXIT_OK
        number, _, _, output_dir = app.service.figure.call_args.args
        assert number == 7
        assert output_dir.replace("\\", "/") == "results/fig7"

    @pytest.mark.parametrize("argv", [
        ["simulate", "--set", "gama0=0.1"],
        ["simulate", "--set", "tau=0.5"],
        ["simulate", "--set", "phi=pi**2"],
        ["simulate", "--set", "noise_amplitude=1.5"],
        ["simulate", "--set", "mode=original", "--set", "envelope=super_gaussian"],
        ["simulate", "--config", "does/not/exist.conf"],
        ["simulate", "--jobs", "0"],
        ["noise-mc", "--set", "noise_runs=0"],
    ])
    async def test_configuration_errors(self, app, argv):
        """Invalid configuration exits 2 before anything runs."""
        # Act
        code = await app.run(parse_args(argv))

        # Assert
        assert code == EXIT_CONFIG
        app.service.simulate.assert_not_called()
        app.service.noise_monte_carlo.assert_not_called()

    @pytest.mark.parametrize("error", [
        ApplicationException("simulate failed", cause=BasisJump("eigenvector jump")),
        BasisJump("eigenvector jump"),
    ])
    async def test_numerical_failure(self, app, error):
        """Numerical failures exit 3."""
        app.service.simulate.side_effect = error

        assert await app.run(parse_args(["simulate"])) == EXIT_NUMERIC

    async def test_unexpected_failure(self, app):
        """Anything else exits 1."""
        app.service.simulate.side_effect = RuntimeError("disk on fire")

        assert await app.run(parse_args(["simulate"])) == EXIT_INTERNAL

    async def test_run_is_timed(self, app):
        """Each command observes its wall-clock time."""
        await app.run(parse_args(["simulate"]))

        assert app.metrics.histogram_summary("simulate_seconds")["count"] == 1
