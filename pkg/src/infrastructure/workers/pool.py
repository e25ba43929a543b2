import multiprocessing
from concurrent.futures import Executor, ProcessPoolExecutor
from functools import partial
from typing import Callable, Optional, Sequence, TypeVar

from loguru import logger

from src.core.logger import setup_worker_logger

T = TypeVar("T")
R = TypeVar("R")


def run_task(function: Callable[[T], R], item: T) -> R:
    try:
        return function(item)
    except Exception as exception:
        logger.error(f"Task '{getattr(function, '__name__', function)}' error: {exception}")
        raise


class WorkerPool:
    """Order-preserving map over a process pool, in-process when ``workers == 1``."""

    def __init__(self, workers: int, log_level: str = "INFO") -> None:
        self.workers = workers
        self.log_level = log_level
        self._executor: Optional[Executor] = None

    @property
    def is_parallel(self) -> bool:
        return self.workers > 1

    def map(self, function: Callable[[T], R], items: Sequence[T]) -> list[R]:
        if not self.is_parallel or len(items) <= 1:
            return [function(item) for item in items]

        executor = self._get_executor()
        chunksize = max(1, len(items) // (self.workers * 4))
        return list(executor.map(partial(run_task, function), items, chunksize=chunksize))

    def close(self) -> None:
        if self._executor is not None:
            logger.debug(f"Shutting down worker pool of '{self.workers}' processes")
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None

    def _get_executor(self) -> Executor:
        if self._executor is None:
            logger.debug(f"Starting worker pool with '{self.workers}' processes")
            self._executor = ProcessPoolExecutor(
                max_workers=self.workers,
                mp_context=multiprocessing.get_context("spawn"),
                initializer=setup_worker_logger,
                initargs=(self.log_level,),
            )
        return self._executor
