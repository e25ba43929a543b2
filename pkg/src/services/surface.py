from typing import Sequence

from loguru import logger

from src.calibration import (
    ParameterSpace,
    SimulatedMomentsObjective,
    surface_scan,
    surface_statistics,
)
from src.core.enums import FreeParameter
from src.models import ModelParams, ObjectiveSpec, SurfaceStatistics, SurfaceTable

from .base import BaseService


class SurfaceService(BaseService):
    def scan(
        self,
        pair: Sequence[FreeParameter],
        spec: ObjectiveSpec,
        base: ModelParams,
        points: int,
    ) -> tuple[SurfaceTable, SurfaceStatistics]:
        space = ParameterSpace(pair, self.config.search.bounds, base)
        objective = SimulatedMomentsObjective(space, spec)

        logger.info(
            f"Scanning '{points}' Sobol points over "
            f"'{space.parameters[0]}' x '{space.parameters[1]}'"
        )
        table = surface_scan(objective.result, space, points, mapper=self.pool.map)
        statistics = surface_statistics(table, space)

        if statistics.penalized:
            logger.warning(f"'{statistics.penalized}' of '{points}' surface points were penalized")

        logger.info(
            f"Surface flatness '{statistics.flatness:.4g}', "
            f"bottom-decile cluster ratio '{statistics.cluster_ratio:.4g}', "
            f"minimum '{statistics.minimum:.6g}' at '{statistics.argmin}'"
        )
        return table, statistics
