from collections.abc import Iterable

from dishka import Provider, Scope, from_context, provide
from loguru import logger

from src.core.config import AppConfig
from src.infrastructure.storage import ArtifactRepository
from src.infrastructure.workers import WorkerPool


class InfrastructureProvider(Provider):
    scope = Scope.APP

    config = from_context(provides=AppConfig)

    @provide
    def get_pool(self, config: AppConfig) -> Iterable[WorkerPool]:
        logger.debug(f"Creating WorkerPool with '{config.workers}' workers")
        pool = WorkerPool(workers=config.workers, log_level=config.log_level)
        yield pool
        pool.close()

    @provide
    def get_artifacts(self, config: AppConfig) -> ArtifactRepository:
        logger.debug(f"Writing artifacts to '{config.output_dir}'")
        return ArtifactRepository(config)
