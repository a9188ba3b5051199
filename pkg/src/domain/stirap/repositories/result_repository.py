"""Result repository interface."""

from abc import ABC, abstractmethod
from typing import Any, List, Mapping, Sequence


class ResultRepository(ABC):
    """Repository interface for experiment outputs.

    Tables are written as CSV with the given header, summaries as
    ``key: value`` lines, and the run configuration is echoed for provenance.
    """

    @abstractmethod
    async def save_table(self, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        """Save a table and return its location."""
        pass

    @abstractmethod
    async def save_summary(self, name: str, values: Mapping[str, Any]) -> str:
        """Save a key/value summary and return its location."""
        pass

    @abstractmethod
    async def save_config_echo(self, name: str, config: Mapping[str, Any]) -> str:
        """Save the effective run configuration and return its location."""
        pass

    @abstractmethod
    async def list_artifacts(self) -> List[str]:
        """List the names of everything saved so far."""
        pass
