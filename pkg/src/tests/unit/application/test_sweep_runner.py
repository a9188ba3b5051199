"""Unit tests for the sweep runner."""

import math

import pytest

from src.application.experiments.services.sweep_runner import SweepRunner, capped_runner


@pytest.mark.unit
@pytest.mark.application
class TestSweepRunner:
    """Test cases for SweepRunner."""

    async def test_sequential_results_sorted_by_key(self):
        """Results come back in key order whatever the task order."""
        # Arrange
        runner = SweepRunner(max_workers=1)
        tasks = [(3, 3), (1, 1), (2, 2)]

        # Act
        results = await runner.map(lambda x: x * 10, tasks)

        # Assert
        assert results == [(1, 10), (2, 20), (3, 30)]

    async def test_tuple_keys(self):
        """Composite keys sort lexicographically."""
        runner = SweepRunner()
        tasks = [(("pi_5", 0.2), 2), (("pi_4", 0.1), 1), (("pi_4", 0.05), 0)]

        results = await runner.map(abs, tasks)

        assert [key for key, _ in results] == [("pi_4", 0.05), ("pi_4", 0.1), ("pi_5", 0.2)]

    @pytest.mark.slow
    async def test_pooled_matches_sequential(self):
        """The process pool gives the same ordered output as the sequential path."""
        # Arrange
        tasks = [(k, k) for k in reversed(range(8))]

        # Act
        pooled = await SweepRunner(max_workers=2).map(math.factorial, tasks)
        sequential = await SweepRunner(max_workers=1).map(math.factorial, tasks)

        # Assert
        assert pooled == sequential
        assert pooled[5] == (5, 120)

    async def test_empty_tasks(self):
        """No tasks, no results."""
        assert await SweepRunner(max_workers=4).map(math.factorial, []) == []

    async def test_duplicate_keys_rejected(self):
        """Keys identify sweep points and must be unique."""
        with pytest.raises(ValueError, match="unique"):
            await SweepRunner().map(abs, [(1, 1), (1, 2)], label="fig2")

    async def test_worker_errors_propagate(self):
        """An exception in a task reaches the caller."""
        def explode(_):
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError, match="boom"):
            await SweepRunner().map(explode, [(0, None)])

    def test_invalid_worker_count(self):
        """At least one worker is required."""
        with pytest.raises(ValueError):
            SweepRunner(max_workers=0)


@pytest.mark.unit
@pytest.mark.application
class TestCappedRunner:
    """Test cases for capped_runner."""

    @pytest.mark.parametrize("jobs,max_jobs,expected", [
        (1, 8, 1),
        (4, 8, 4),
        (16, 8, 8),
        (0, 8, 1),
    ])
    def test_worker_count_is_clipped(self, jobs, max_jobs, expected):
        """Requested jobs are clipped to [1, max_jobs]."""
        assert capped_runner(jobs, max_jobs).max_workers == expected
