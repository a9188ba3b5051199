"""Fan-out of independent sweep points to a worker pool."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Hashable, List, Sequence, Tuple

logger = logging.getLogger(__name__)

Task = Tuple[Hashable, Any]


class SweepRunner:
    """Runs ``fn(arg)`` for every ``(key, arg)`` task and returns ``(key, result)`` sorted by key.

    With ``max_workers == 1`` the tasks run in order on the calling thread's
    executor; otherwise they go to a process pool. Either way the output
    order depends only on the keys, never on completion order. ``fn`` and the
    arguments must be picklable for the pooled path.
    """

    def __init__(self, max_workers: int = 1):
        if max_workers < 1:
            raise ValueError(f"max_workers must be at least 1, got {max_workers}")
        self.max_workers = max_workers

    async def map(self, fn: Callable[[Any], Any], tasks: Sequence[Task], label: str = "sweep") -> List[Tuple[Hashable, Any]]:
        if not tasks:
            return []
        keys = [key for key, _ in tasks]
        if len(set(keys)) != len(keys):
            raise ValueError(f"{label}: task keys must be unique")

        loop = asyncio.get_running_loop()
        workers = min(self.max_workers, len(tasks))
        logger.info(f"{label}: {len(tasks)} points on {workers} worker(s)")

        if workers == 1:
            results = []
            for done, (key, arg) in enumerate(tasks, start=1):
                results.append((key, await asyncio.to_thread(fn, arg)))
                logger.info(f"{label}: {done}/{len(tasks)} done")
        else:
            results = await self._pooled(loop, fn, tasks, workers, label)

        return sorted(results, key=lambda item: item[0])

    @staticmethod
    async def _pooled(loop, fn, tasks: Sequence[Task], workers: int, label: str) -> List[Tuple[Hashable, Any]]:
        results = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {
                asyncio.ensure_future(loop.run_in_executor(pool, fn, arg)): key
                for key, arg in tasks
            }
            pending = set(futures)
            while pending:
                finished, pending = await asyncio.wait(pending, return_when=asyncio.FIRST_COMPLETED)
                for future in finished:
                    results.append((futures[future], future.result()))
                logger.info(f"{label}: {len(results)}/{len(tasks)} done")
        return results


def capped_runner(jobs: int, max_jobs: int) -> SweepRunner:
    """Runner with ``jobs`` workers, clipped to ``[1, max_jobs]``."""
    return SweepRunner(max(1, min(int(jobs), int(max_jobs))))
