import math
from typing import Optional, Sequence

import numpy as np
import numpy.typing as npt
from loguru import logger

from src.analysis import moments, target_moments
from src.core.constants import BOOTSTRAP_MIN_BLOCKS
from src.core.enums import MomentBasis, ReplicationAggregation
from src.core.exceptions import (
    ConfigurationError,
    DegenerateSeriesError,
    DegenerateVarianceError,
    SingularMatrixError,
)
from src.core.utils.types import FloatArray
from src.engine import simulate
from src.models import (
    BootstrapSource,
    EvaluationRecord,
    ModelParams,
    MomentVector,
    ObjectiveResult,
    ObjectiveSpec,
    RunConfig,
    WeightMatrix,
)

from .space import ParameterSpace


def weight_matrix_from_covariance(
    covariance: npt.ArrayLike,
    ridge: float,
    source: Optional[BootstrapSource] = None,
) -> WeightMatrix:
    sigma = np.asarray(covariance, dtype=np.float64)
    size = sigma.shape[0]
    regularized = sigma + ridge * np.trace(sigma) / size * np.eye(size)

    try:
        inverse = np.linalg.inv(regularized)
    except np.linalg.LinAlgError as exception:
        raise SingularMatrixError(
            f"Moment covariance is singular with ridge '{ridge}'"
        ) from exception

    if not np.all(np.isfinite(inverse)):
        raise SingularMatrixError(f"Moment covariance inverse is not finite with ridge '{ridge}'")

    return WeightMatrix(matrix=(inverse + inverse.T) / 2, ridge=ridge, source=source)


def circular_block_indices(
    length: int,
    block_length: int,
    resamples: int,
    rng: np.random.Generator,
) -> npt.NDArray[np.int64]:
    blocks = math.ceil(length / block_length)
    starts = rng.integers(0, length, size=(resamples, blocks))
    indices = (starts[:, :, None] + np.arange(block_length)) % length
    return indices.reshape(resamples, -1)[:, :length]


def build_weight_matrix(
    empirical: npt.ArrayLike,
    block_length: int,
    resamples: int,
    ridge: float,
    seed: int,
    *,
    basis: MomentBasis = MomentBasis.LEVELS,
    tau_min: int = 1,
    tau_max: int = 19,
) -> WeightMatrix:
    """Inverse covariance of bootstrap moment vectors of the empirical series.

    Resamples are drawn with a circular block bootstrap; the KS component of each
    resample is measured against the full series.
    """
    series = np.asarray(empirical, dtype=np.float64)

    if series.size < BOOTSTRAP_MIN_BLOCKS * block_length:
        raise ConfigurationError(
            f"Empirical series of length '{series.size}' is shorter than "
            f"'{BOOTSTRAP_MIN_BLOCKS}' blocks of '{block_length}'"
        )

    rng = np.random.default_rng(seed)
    indices = circular_block_indices(series.size, block_length, resamples, rng)

    vectors: list[FloatArray] = []
    for row in indices:
        try:
            vector = moments(series[row], series, basis=basis, tau_min=tau_min, tau_max=tau_max)
        except DegenerateSeriesError:
            continue
        vectors.append(vector.as_array())

    if len(vectors) < 2:
        raise SingularMatrixError("Too few usable bootstrap resamples for a covariance")

    if len(vectors) < resamples:
        logger.warning(f"Skipped '{resamples - len(vectors)}' degenerate bootstrap resamples")

    covariance = np.cov(np.vstack(vectors), rowvar=False)
    source = BootstrapSource(block_length=block_length, resamples=resamples, seed=seed)
    return weight_matrix_from_covariance(covariance, ridge, source)


def build_objective_spec(
    empirical: npt.ArrayLike,
    weights: WeightMatrix,
    run: RunConfig,
    *,
    replications: int = 5,
    seed_base: int = 1000,
    aggregation: ReplicationAggregation = ReplicationAggregation.AVERAGE_MOMENTS,
    basis: MomentBasis = MomentBasis.LEVELS,
    tau_min: int = 1,
    tau_max: int = 19,
) -> ObjectiveSpec:
    series = np.asarray(empirical, dtype=np.float64)

    if replications < 1:
        raise ConfigurationError("At least one replication is required")
    if series.size != run.steps:
        raise ConfigurationError(
            f"Simulation length '{run.steps}' does not match '{series.size}' empirical bars"
        )

    return ObjectiveSpec(
        empirical=series,
        target=target_moments(series, basis=basis, tau_min=tau_min, tau_max=tau_max),
        weights=weights,
        run=run,
        replications=replications,
        seed_base=seed_base,
        aggregation=aggregation,
        basis=basis,
        hurst_tau_min=tau_min,
        hurst_tau_max=tau_max,
    )


def moment_errors(simulated: MomentVector, target: MomentVector) -> FloatArray:
    # The target KS component is zero by construction
    return simulated.as_array() - target.as_array()


def simulate_moments(params: ModelParams, spec: ObjectiveSpec, seed: int) -> MomentVector:
    output = simulate(params, spec.run.with_values(seed=seed))
    return moments(
        output.log_prices,
        spec.empirical,
        basis=spec.basis,
        tau_min=spec.hurst_tau_min,
        tau_max=spec.hurst_tau_max,
    )


def evaluate(params: ModelParams, spec: ObjectiveSpec) -> ObjectiveResult:
    replicated: list[MomentVector] = []

    try:
        for i in range(spec.replications):
            replicated.append(simulate_moments(params, spec, spec.seed_base + i))
    except (DegenerateVarianceError, DegenerateSeriesError) as exception:
        logger.debug(f"Penalized evaluation: {exception}")
        return ObjectiveResult(
            value=spec.penalty,
            penalized=True,
            moments=replicated,
            reason=str(exception),
        )

    if spec.aggregation is ReplicationAggregation.AVERAGE_OBJECTIVES:
        forms = [spec.weights.quadratic_form(moment_errors(m, spec.target)) for m in replicated]
        value = float(np.mean(forms))
    else:
        averaged = MomentVector.from_array(np.mean([m.as_array() for m in replicated], axis=0))
        value = spec.weights.quadratic_form(moment_errors(averaged, spec.target))

    return ObjectiveResult(value=max(0.0, value), penalized=False, moments=replicated)


class SimulatedMomentsObjective:
    """Picklable objective over a ``ParameterSpace``, optionally keeping a history."""

    def __init__(self, space: ParameterSpace, spec: ObjectiveSpec, record: bool = False) -> None:
        self.space = space
        self.spec = spec
        self.record = record
        self.history: list[EvaluationRecord] = []

    def __call__(self, x: FloatArray) -> float:
        return self.result(x).value

    def result(self, x: FloatArray) -> ObjectiveResult:
        params = self.space.to_params(x)
        outcome = evaluate(params, self.spec)

        if self.record:
            free = params.free_values(self.space.parameters)
            self.history.append(EvaluationRecord(params=free, result=outcome))

        return outcome

    def results(self, points: Sequence[FloatArray]) -> list[ObjectiveResult]:
        return [self.result(x) for x in points]
