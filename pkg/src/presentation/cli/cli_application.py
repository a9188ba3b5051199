"""Command-line front end for the experiment service."""

import argparse
import logging
from pathlib import Path
from typing import Awaitable, Optional, Sequence

from pydantic import ValidationError

from src.application.experiments.results import ExperimentResult
from src.application.experiments.services.figures import FIGURE_NUMBERS
from src.application.shared.exceptions import ApplicationException
from src.config.validation import validate_run_config
from src.domain.shared.exceptions import DomainError, InvariantViolation
from src.infrastructure.monitoring.metrics_collector import Timer
from src.presentation.cli.config_loader import ConfigFileError, load_config_file, parse_overrides
from src.presentation.cli.run_config import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key = value run configuration file")
    common.add_argument(
        "--set", dest="overrides", metavar="KEY=VALUE", action="append", default=[],
        help="Override one config key (repeatable)",
    )
    common.add_argument("--out", metavar="DIR", help="Output directory")
    common.add_argument("--seed", type=int, help="Master seed for noise draws")
    common.add_argument("--jobs", type=int, default=1, help="Worker processes for sweeps and Monte Carlo")
    common.add_argument("--log-level", default=None, help="Logging level (default from LOG_LEVEL)")

    parser = argparse.ArgumentParser(
        prog="stirap",
        description="Shortcut STIRAP simulations and figure data",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("simulate", parents=[common], help="Propagate one configured run")
    figure = commands.add_parser("figure", parents=[common], help="Regenerate the data behind one figure")
    figure.add_argument("number", type=int, choices=FIGURE_NUMBERS)
    commands.add_parser("noise-mc", parents=[common], help="Noise Monte Carlo on the shortcut drive")
    return parser


class CliApplication:
    """Loads and validates the run config, dispatches to the service and maps failures to exit codes.

    Exit codes: 0 success, 2 configuration error, 3 numerical failure,
    1 anything unexpected.
    """

    def __init__(self, container):
        self.container = container
        self.settings = container.settings()
        self.service = container.experiment_application_service()
        self.metrics = container.metrics_collector()

    def load_config(self, args: argparse.Namespace) -> RunConfig:
        file_values = load_config_file(args.config) if args.config else {}
        return RunConfig.from_sources(file_values, parse_overrides(args.overrides), seed=args.seed)

    def output_dir(self, args: argparse.Namespace, config: RunConfig) -> str:
        if args.out:
            return args.out
        if config.output:
            return config.output
        name = f"fig{args.number}" if args.command == "figure" else args.command.replace("-", "_")
        return str(Path(self.settings.execution.output_root) / name)

    async def run(self, args: argparse.Namespace) -> int:
        try:
            config = self.load_config(args)
        except (ConfigFileError, ValidationError, InvariantViolation) as e:
            logger.error(f"Invalid configuration: {e}")
            return EXIT_CONFIG

        is_valid, errors = validate_run_config(config)
        if not is_valid:
            for error in errors:
                logger.error(f"Invalid configuration: {error}")
            return EXIT_CONFIG
        if args.jobs < 1:
            logger.error(f"--jobs must be at least 1, got {args.jobs}")
            return EXIT_CONFIG

        output_dir = self.output_dir(args, config)
        try:
            with Timer(self.metrics, f"{args.command}_seconds"):
                result = await self._dispatch(args, config, output_dir)
        except (ApplicationException, DomainError) as e:
            logger.error(f"{args.command} failed: {e}")
            return EXIT_NUMERIC
        except Exception as e:
            logger.exception(f"Unexpected error in {args.command}: {e}")
            return EXIT_INTERNAL

        logger.info(f"{result.experiment}: {len(result.files)} files in {result.location}")
        logger.debug(f"Metrics: {self.metrics.get_metrics()}")
        return EXIT_OK

    def _dispatch(self, args: argparse.Namespace, config: RunConfig, output_dir: str) -> Awaitable[ExperimentResult]:
        request = config.simulation_request()
        echo = config.echo()
        if args.command == "simulate":
            return self.service.simulate(request, output_dir, config_echo=echo, jobs=args.jobs)
        if args.command == "figure":
            return self.service.figure(
                args.number, request, config.noise_config(), output_dir,
                n_runs=config.noise_runs, config_echo=echo, jobs=args.jobs,
            )
        return self.service.noise_monte_carlo(
            request, config.noise_config(), output_dir,
            n_runs=config.noise_runs, config_echo=echo, jobs=args.jobs,
        )


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(list(argv) if argv is not None else None)
