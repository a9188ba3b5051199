"""Configuration validation utilities."""

import logging
from typing import TYPE_CHECKING, Callable, List, Optional, Tuple

from pydantic import ValidationError

from src.domain.shared.exceptions import DomainError
from src.domain.stirap.services.pulse_shapes import envelope_function

if TYPE_CHECKING:
    from src.presentation.cli.run_config import RunConfig

logger = logging.getLogger(__name__)


def validate_run_config(config: "RunConfig") -> Tuple[bool, List[str]]:
    """Check every domain invariant a run config touches.

    Each group (pulse shape, noise, emission rates, integrator settings) is
    built on its own so that all problems are reported together.

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    errors: List[str] = []
    checks: List[Tuple[str, Callable[[], object]]] = [
        ("pulse", config.pulse_params),
        ("noise", config.noise_config),
        ("lindblad", config.lindblad_params),
    ]
    for group, build in checks:
        try:
            build()
        except DomainError as e:
            errors.append(f"{group}: {e}")

    if not errors:
        try:
            request = config.simulation_request()
            if request.mode == "original":
                envelope_function(request.envelope)(0.0, request.params)
        except DomainError as e:
            errors.append(f"run: {e}")

    if config.noise_runs < 1:
        errors.append(f"noise: noise_runs must be at least 1, got {config.noise_runs}")

    for error in errors:
        logger.debug(f"Run config error: {error}")
    return len(errors) == 0, errors


def validate_settings_creation() -> Tuple[bool, Optional[str]]:
    """Test if settings can be created without errors.

    Returns:
        Tuple of (is_valid, error_message)
    """
    try:
        from src.config.settings import Settings
        Settings()
        logger.debug("Settings validation successful")
        return True, None
    except ValidationError as e:
        error_msg = f"Settings validation failed: {e}"
        logger.error(error_msg)
        return False, error_msg
    except Exception as e:
        error_msg = f"Unexpected error during settings validation: {e}"
        logger.error(error_msg)
        return False, error_msg
