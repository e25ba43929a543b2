from typing import Any, Callable, NamedTuple, Optional

import msgspec
import numpy as np
from loguru import logger

from src.core.constants import (
    NM_CONTRACTION,
    NM_EXPANSION,
    NM_REFLECTION,
    NM_SHRINK,
    THRESHOLD_FINAL_RATIO,
    THRESHOLD_FRACTION,
)
from src.core.enums import CalibrationMethod, ThresholdKind
from src.core.utils.types import FloatArray
from src.models import CalibrationExperiment, TrajectoryPoint

from .space import Mapper, ParameterSpace, serial_map

Objective = Callable[[FloatArray], float]


class ThresholdSchedule(msgspec.Struct, frozen=True):
    kind: ThresholdKind = ThresholdKind.GEOMETRIC
    fraction: float = THRESHOLD_FRACTION
    final_ratio: float = THRESHOLD_FINAL_RATIO

    def thresholds(self, spread: float, iterations: int) -> FloatArray:
        tau0 = self.fraction * spread
        if self.kind is ThresholdKind.NONE or iterations < 1 or not np.isfinite(tau0) or tau0 <= 0:
            return np.zeros(max(iterations, 0))

        exponents = np.arange(iterations) / max(iterations - 1, 1)
        values = tau0 * self.final_ratio**exponents
        values[-1] = 0.0
        return values

    @classmethod
    def zero(cls) -> "ThresholdSchedule":
        return cls(kind=ThresholdKind.NONE)


def initial_spread(values: FloatArray, penalty: float = np.inf) -> float:
    scored = values[np.isfinite(values) & (values < penalty)]
    return float(scored.max() - scored.min()) if scored.size > 1 else 0.0


class NelderMeadResult(NamedTuple):
    best: FloatArray
    best_value: float
    trajectory: list[tuple[int, float, FloatArray]]
    evaluations: int
    thresholds: FloatArray


def minimize_nelder_mead_ta(
    objective: Objective,
    simplex: FloatArray,
    iterations: int,
    schedule: ThresholdSchedule,
    *,
    project: Optional[Callable[[FloatArray], FloatArray]] = None,
    mapper: Mapper = serial_map,
    penalty: float = np.inf,
) -> NelderMeadResult:
    """Nelder-Mead simplex search with threshold accepting.

    A reflected or contracted candidate replaces the worst vertex when its value is
    within the current threshold of the vertex it competes with. The best point ever
    evaluated is tracked separately, so the result never regresses. The initial threshold
    scales with the spread of the starting vertices that score below ``penalty``.
    """
    clamp = project or (lambda x: x)
    vertices = np.array([clamp(v) for v in simplex], dtype=np.float64)
    values = np.array(mapper(objective, list(vertices)), dtype=np.float64)
    evaluations = len(vertices)

    best_index = int(np.argmin(values))
    best, best_value = vertices[best_index].copy(), float(values[best_index])
    trajectory = [(0, best_value, best.copy())]

    thresholds = schedule.thresholds(initial_spread(values, penalty), iterations)

    def evaluate(x: FloatArray) -> float:
        nonlocal evaluations, best, best_value
        evaluations += 1
        value = float(objective(x))
        if value < best_value:
            best, best_value = x.copy(), value
        return value

    for iteration in range(1, iterations + 1):
        threshold = float(thresholds[iteration - 1])

        order = np.argsort(values, kind="stable")
        vertices, values = vertices[order], values[order]
        centroid = vertices[:-1].mean(axis=0)
        worst, worst_value = vertices[-1], values[-1]

        reflected = clamp(centroid + NM_REFLECTION * (centroid - worst))
        reflected_value = evaluate(reflected)

        if reflected_value < values[0]:
            expanded = clamp(centroid + NM_EXPANSION * (reflected - centroid))
            expanded_value = evaluate(expanded)
            if expanded_value < reflected_value:
                vertices[-1], values[-1] = expanded, expanded_value
            else:
                vertices[-1], values[-1] = reflected, reflected_value

        elif reflected_value < values[-2] + threshold:
            vertices[-1], values[-1] = reflected, reflected_value

        else:
            if reflected_value < worst_value:
                contracted = clamp(centroid + NM_CONTRACTION * (reflected - centroid))
                incumbent = reflected_value
            else:
                contracted = clamp(centroid + NM_CONTRACTION * (worst - centroid))
                incumbent = worst_value
            contracted_value = evaluate(contracted)

            if contracted_value <= incumbent + threshold:
                vertices[-1], values[-1] = contracted, contracted_value
            else:
                shrunk = [clamp(vertices[0] + NM_SHRINK * (v - vertices[0])) for v in vertices[1:]]
                shrunk_values = mapper(objective, shrunk)
                evaluations += len(shrunk)

                for i, (vertex, value) in enumerate(zip(shrunk, shrunk_values), start=1):
                    vertices[i], values[i] = vertex, value
                    if value < best_value:
                        best, best_value = vertex.copy(), float(value)

        trajectory.append((iteration, best_value, best.copy()))

    return NelderMeadResult(
        best=best,
        best_value=best_value,
        trajectory=trajectory,
        evaluations=evaluations,
        thresholds=thresholds,
    )


def nelder_mead_ta(
    objective: Objective,
    space: ParameterSpace,
    iterations: int,
    schedule: ThresholdSchedule,
    seed: int,
    *,
    mapper: Mapper = serial_map,
    penalty: float = np.inf,
    config: Optional[dict[str, Any]] = None,
) -> CalibrationExperiment:
    rng = np.random.default_rng(seed)
    simplex = space.sample(rng, space.dimension + 1)

    result = minimize_nelder_mead_ta(
        objective,
        simplex,
        iterations,
        schedule,
        project=space.project,
        mapper=mapper,
        penalty=penalty,
    )

    logger.info(
        f"Nelder-Mead seed '{seed}' finished: objective "
        f"'{result.trajectory[0][1]:.6g}' -> '{result.best_value:.6g}' "
        f"after '{result.evaluations}' evaluations"
    )

    return CalibrationExperiment(
        method=CalibrationMethod.NM,
        seed=seed,
        free_parameters=list(space.parameters),
        config={
            "iterations": iterations,
            "threshold_kind": schedule.kind.value,
            "threshold_fraction": schedule.fraction,
            "threshold_final_ratio": schedule.final_ratio,
            "thresholds": result.thresholds.tolist(),
            **(config or {}),
        },
        trajectory=[
            TrajectoryPoint(iteration=i, best_objective=value, best_params=space.effective(x))
            for i, value, x in result.trajectory
        ],
        final_params=space.effective(result.best),
        final_objective=result.best_value,
        evaluations=result.evaluations,
    )
