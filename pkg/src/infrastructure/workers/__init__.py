from .pool import WorkerPool

__all__ = [
    "WorkerPool",
]
