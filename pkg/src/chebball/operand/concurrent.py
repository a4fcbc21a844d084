"""Ordered parallel map for independent, picklable jobs."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
U = TypeVar("U")

logger = logging.getLogger(__name__)


def ordered_map(func: Callable[[T], U], jobs: Sequence[T], workers: int = 1) -> list[U]:
    """Run func over jobs, in worker processes when workers > 1.

    Results come back in job order whatever the completion order, so a single
    consumer can write them deterministically. ``func`` must be a module-level
    callable when workers > 1.
    """
    if workers <= 1 or len(jobs) <= 1:
        return [func(job) for job in jobs]

    async def run_parallel() -> list[U]:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [loop.run_in_executor(pool, func, job) for job in jobs]
            return list(await asyncio.gather(*futures))

    logger.debug("dispatching %d jobs to %d workers", len(jobs), workers)
    return asyncio.run(run_parallel())
