"""Unit tests for the result repositories."""

import pytest

from src.infrastructure.persistence.repositories.file_system_result_repository import FileSystemResultRepository
from src.infrastructure.persistence.repositories.in_memory_result_repository import InMemoryResultRepository


@pytest.mark.unit
@pytest.mark.infrastructure
class TestFileSystemResultRepository:
    """Test cases for FileSystemResultRepository."""

    async def test_writes_files_into_new_directory(self, tmp_path):
        """The output directory is created on first write."""
        # Arrange
        repository = FileSystemResultRepository(str(tmp_path / "out" / "fig2"))

        # Act
        csv_path = await repository.save_table("fig2", ("gamma0", "area_over_pi"), [(0.1, 4.1)])
        summary_path = await repository.save_summary("fig2_summary", {"area_trend": "strictly_decreasing"})
        config_path = await repository.save_config_echo("config", {"n_steps": 4096})

        # Assert
        assert csv_path == str(tmp_path / "out" / "fig2" / "fig2.csv")
        assert (tmp_path / "out" / "fig2" / "fig2.csv").read_bytes() == b"gamma0,area_over_pi\n0.1,4.1\n"
        assert open(summary_path, encoding="utf-8").read() == "area_trend: strictly_decreasing\n"
        assert open(config_path, encoding="utf-8").read() == "n_steps = 4096\n"
        assert await repository.list_artifacts() == ["config.conf", "fig2.csv", "fig2_summary.txt"]

    async def test_overwrites_existing_file(self, tmp_path):
        """A second write with the same name replaces the first."""
        # Arrange
        repository = FileSystemResultRepository(str(tmp_path))

        # Act
        await repository.save_summary("summary", {"p3_final": 0.5})
        await repository.save_summary("summary", {"p3_final": 0.997})

        # Assert
        assert (tmp_path / "summary.txt").read_text(encoding="utf-8") == "p3_final: 0.997\n"

    async def test_missing_directory_lists_nothing(self, tmp_path):
        """Nothing has been written yet."""
        assert await FileSystemResultRepository(str(tmp_path / "absent")).list_artifacts() == []


@pytest.mark.unit
@pytest.mark.infrastructure
class TestInMemoryResultRepository:
    """Test cases for InMemoryResultRepository."""

    async def test_renders_like_the_file_system(self, tmp_path):
        """Both repositories produce the same text."""
        # Arrange
        memory = InMemoryResultRepository()
        disk = FileSystemResultRepository(str(tmp_path))
        rows = [(-0.5, 1.0, 0.0, 0.0), (0.5, 0.001, 0.002, 0.997)]

        # Act
        await memory.save_table("trajectory", ("t", "P1", "P2", "P3"), rows)
        await disk.save_table("trajectory", ("t", "P1", "P2", "P3"), rows)

        # Assert
        assert await memory.read("trajectory.csv") == (tmp_path / "trajectory.csv").read_text(encoding="utf-8")

    async def test_unknown_artifact(self, result_repository):
        """Reading something never saved fails loudly."""
        with pytest.raises(KeyError):
            await result_repository.read("missing.csv")
