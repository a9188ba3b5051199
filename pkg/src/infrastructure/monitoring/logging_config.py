"""Logging configuration for experiment runs."""

import logging
import sys
from typing import Optional

LOG_FORMAT = '%(asctime)s | %(levelname)s | %(name)s | %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

_QUIET_LOGGERS = ("asyncio", "dependency_injector", "concurrent.futures")


def setup_logging(log_level: str = "INFO", stream=None) -> None:
    """Configure the root logger for a run.

    Log records go to stdout (or ``stream``) only; result files never
    receive log output. Python warnings, including convergence warnings
    emitted with :func:`warnings.warn`, are routed through logging.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        stream: Optional text stream replacing stdout
    """
    level = getattr(logging, log_level.upper(), logging.INFO)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(stream or sys.stdout)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    for name in _QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)
    logging.captureWarnings(True)

    logging.info(f"Logging configured with level: {log_level}")


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """Get a logger, optionally pinning its level."""
    logger = logging.getLogger(name)
    if level is not None:
        logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    return logger
