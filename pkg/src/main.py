"""Main entry point for the application."""

import asyncio
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

# Add project root to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config.dependencies import Container
from src.config.validation import validate_settings_creation
from src.infrastructure.monitoring.logging_config import setup_logging
from src.presentation.cli.cli_application import EXIT_CONFIG, CliApplication, parse_args

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse the command line, wire the container and run one command.

    Returns:
        Process exit code
    """
    args = parse_args(argv)

    settings_valid, settings_error = validate_settings_creation()
    if not settings_valid:
        setup_logging("INFO")
        logger.error(settings_error)
        return EXIT_CONFIG

    container = Container()
    setup_logging(args.log_level or container.settings().effective_log_level)

    logger.debug("Bootstrapping container (registering handlers with buses)...")
    Container.bootstrap(container)

    try:
        return asyncio.run(CliApplication(container).run(args))
    except KeyboardInterrupt:
        logger.info("Interrupted, shutting down...")
        return 130


if __name__ == "__main__":
    sys.exit(main())
