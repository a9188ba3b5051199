"""File-system result repository."""

import asyncio
import logging
from pathlib import Path
from typing import Any, List, Mapping, Sequence

from src.domain.stirap.repositories.result_repository import ResultRepository
from src.infrastructure.persistence.formatting import render_config_echo, render_csv, render_summary

logger = logging.getLogger(__name__)


class FileSystemResultRepository(ResultRepository):
    """Writes artifacts into one output directory.

    Files are written as UTF-8 with LF line endings regardless of platform.
    An existing file with the same name is replaced.
    """

    def __init__(self, output_dir: str):
        self.output_dir = Path(output_dir)
        self._lock = asyncio.Lock()

    async def save_table(self, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        return await self._write(f"{name}.csv", render_csv(header, rows))

    async def save_summary(self, name: str, values: Mapping[str, Any]) -> str:
        return await self._write(f"{name}.txt", render_summary(values))

    async def save_config_echo(self, name: str, config: Mapping[str, Any]) -> str:
        return await self._write(f"{name}.conf", render_config_echo(config))

    async def list_artifacts(self) -> List[str]:
        if not self.output_dir.is_dir():
            return []
        return sorted(p.name for p in self.output_dir.iterdir() if p.is_file())

    async def _write(self, filename: str, text: str) -> str:
        path = self.output_dir / filename
        async with self._lock:
            await asyncio.to_thread(self._write_text, path, text)
        logger.info(f"Wrote {path}")
        return str(path)

    @staticmethod
    def _write_text(path: Path, text: str) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
