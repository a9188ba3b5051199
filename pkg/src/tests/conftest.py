"""Pytest configuration and global fixtures."""

import logging
import os
from unittest.mock import AsyncMock, MagicMock, patch

import numpy as np
import pytest

from src.domain.stirap.services.drive_schedules import OriginalDrive, ShortcutDrive
from src.domain.stirap.value_objects.pulse_params import PulseParams
from src.infrastructure.persistence.repositories.in_memory_result_repository import InMemoryResultRepository
from src.tests.utils.factories import NoiseConfigFactory, PulseParamsFactory

pytest_plugins = ('pytest_asyncio',)


@pytest.fixture
def reference_params() -> PulseParams:
    """Reference pulse parameters used throughout the figures."""
    return PulseParamsFactory.create_reference_params()


@pytest.fixture
def shortcut_drive(reference_params) -> ShortcutDrive:
    """Shortcut drive built from the reference parameters."""
    return ShortcutDrive(reference_params)


@pytest.fixture
def original_drive(reference_params) -> OriginalDrive:
    """Uncorrected drive with a flat amplitude at ``omega0_ref``."""
    return OriginalDrive(reference_params)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for randomized checks."""
    return np.random.default_rng(12345)


@pytest.fixture
def noise_config():
    """Independent ten-percent noise on every channel."""
    return NoiseConfigFactory.create_config()


@pytest.fixture
def result_repository() -> InMemoryResultRepository:
    """In-memory result repository."""
    return InMemoryResultRepository()


@pytest.fixture
def mock_result_repository():
    """Mock result repository."""
    repository = AsyncMock()
    repository.save_table.return_value = "trajectory.csv"
    repository.save_summary.return_value = "summary.txt"
    repository.save_config_echo.return_value = "config.txt"
    repository.list_artifacts.return_value = []
    return repository


@pytest.fixture
def mock_event_bus():
    """Mock event bus."""
    bus = AsyncMock()
    bus.publish = AsyncMock()
    return bus


@pytest.fixture
def mock_logger():
    """Mock logger."""
    return MagicMock(spec=logging.Logger)


@pytest.fixture(autouse=True)
def setup_test_environment():
    """Setup test environment variables."""
    test_env = {
        "ENVIRONMENT": "test",
        "LOG_LEVEL": "DEBUG",
        "STIRAP_MAX_JOBS": "2",
    }
    with patch.dict(os.environ, test_env):
        yield
