from abc import ABC

from src.core.config import AppConfig
from src.infrastructure.storage import ArtifactRepository
from src.infrastructure.workers import WorkerPool


class BaseService(ABC):
    config: AppConfig
    pool: WorkerPool
    artifacts: ArtifactRepository

    def __init__(
        self,
        config: AppConfig,
        pool: WorkerPool,
        artifacts: ArtifactRepository,
    ) -> None:
        self.config = config
        self.pool = pool
        self.artifacts = artifacts
