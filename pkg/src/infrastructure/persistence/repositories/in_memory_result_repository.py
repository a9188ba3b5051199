"""In-memory result repository."""

import asyncio
from typing import Any, Dict, List, Mapping, Sequence

from src.domain.stirap.repositories.result_repository import ResultRepository
from src.infrastructure.persistence.formatting import render_config_echo, render_csv, render_summary


class InMemoryResultRepository(ResultRepository):
    """Keeps rendered artifacts in a dict keyed by file name; used by tests."""

    def __init__(self):
        self._artifacts: Dict[str, str] = {}
        self._lock = asyncio.Lock()

    async def save_table(self, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        return await self._store(f"{name}.csv", render_csv(header, rows))

    async def save_summary(self, name: str, values: Mapping[str, Any]) -> str:
        return await self._store(f"{name}.txt", render_summary(values))

    async def save_config_echo(self, name: str, config: Mapping[str, Any]) -> str:
        return await self._store(f"{name}.conf", render_config_echo(config))

    async def list_artifacts(self) -> List[str]:
        async with self._lock:
            return sorted(self._artifacts)

    async def read(self, filename: str) -> str:
        """Rendered text of a saved artifact."""
        async with self._lock:
            return self._artifacts[filename]

    async def _store(self, filename: str, text: str) -> str:
        async with self._lock:
            self._artifacts[filename] = text
        return filename
