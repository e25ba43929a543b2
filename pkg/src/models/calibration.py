from typing import Any, Optional

import msgspec
import numpy as np

from src.core.constants import PENALTY_SCALE
from src.core.enums import CalibrationMethod, FreeParameter, MomentBasis, ReplicationAggregation
from src.core.utils.types import FloatArray

from .params import RunConfig
from .statistics import ConfidenceInterval, MomentVector


class BootstrapSource(msgspec.Struct, frozen=True):
    block_length: int
    resamples: int
    seed: int
    method: str = "circular_block_bootstrap"


class WeightMatrix(msgspec.Struct, frozen=True):
    matrix: FloatArray
    ridge: float
    source: Optional[BootstrapSource] = None

    @property
    def max_diagonal(self) -> float:
        return float(np.max(np.diag(self.matrix)))

    def quadratic_form(self, errors: FloatArray) -> float:
        return float(errors @ self.matrix @ errors)

    @property
    def penalty(self) -> float:
        return PENALTY_SCALE * (1.0 + self.max_diagonal)


class ObjectiveResult(msgspec.Struct, frozen=True):
    value: float
    penalized: bool
    moments: list[MomentVector]
    reason: Optional[str] = None


#


class TrajectoryPoint(msgspec.Struct, frozen=True):
    iteration: int
    best_objective: float
    best_params: dict[str, float]


class CalibrationExperiment(msgspec.Struct, frozen=True):
    method: CalibrationMethod
    seed: int
    free_parameters: list[FreeParameter]
    config: dict[str, Any]
    trajectory: list[TrajectoryPoint]
    final_params: dict[str, float]
    final_objective: float
    evaluations: int

    @property
    def initial_objective(self) -> float:
        return self.trajectory[0].best_objective if self.trajectory else self.final_objective


class ParameterInterval(msgspec.Struct, frozen=True):
    parameter: FreeParameter
    interval: ConfidenceInterval


#


class SurfaceRow(msgspec.Struct, frozen=True):
    x: float
    y: float
    objective: float
    penalized: bool


class SurfaceTable(msgspec.Struct, frozen=True):
    pair: tuple[FreeParameter, FreeParameter]
    rows: list[SurfaceRow]

    @property
    def objectives(self) -> FloatArray:
        return np.array([row.objective for row in self.rows])

    @property
    def points(self) -> FloatArray:
        return np.array([[row.x, row.y] for row in self.rows])


class SurfaceStatistics(msgspec.Struct, frozen=True):
    flatness: float
    cluster_ratio: float
    argmin: tuple[float, float]
    minimum: float
    penalized: int


class MomentComparison(msgspec.Struct, frozen=True):
    name: str
    simulated: ConfidenceInterval
    empirical: float


class EvaluationRecord(msgspec.Struct, frozen=True):
    params: dict[str, float]
    result: ObjectiveResult


class ObjectiveSpec(msgspec.Struct, frozen=True):
    empirical: FloatArray
    target: MomentVector
    weights: WeightMatrix
    run: RunConfig
    replications: int = 5
    seed_base: int = 1000  # replication i runs with seed seed_base + i
    aggregation: ReplicationAggregation = ReplicationAggregation.AVERAGE_MOMENTS
    basis: MomentBasis = MomentBasis.LEVELS
    hurst_tau_min: int = 1
    hurst_tau_max: int = 19

    @property
    def penalty(self) -> float:
        return self.weights.penalty
