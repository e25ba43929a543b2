from typing import Any, Callable, Optional

import msgspec
import numpy as np
from loguru import logger

from src.core.constants import (
    GA_CROSSOVER_RATE,
    GA_ELITES,
    GA_MUTATION_RATE,
    GA_MUTATION_SCALE,
    GA_TOURNAMENT_SIZE,
)
from src.core.enums import CalibrationMethod
from src.core.utils.types import FloatArray
from src.models import CalibrationExperiment, TrajectoryPoint

from .space import Mapper, ParameterSpace, serial_map

Objective = Callable[[FloatArray], float]


class GeneticOperators(msgspec.Struct, frozen=True):
    tournament_size: int = GA_TOURNAMENT_SIZE
    crossover_rate: float = GA_CROSSOVER_RATE
    mutation_rate: float = GA_MUTATION_RATE
    mutation_scale: float = GA_MUTATION_SCALE  # fraction of each gene's range
    elites: int = GA_ELITES


def tournament(fitness: FloatArray, size: int, rng: np.random.Generator) -> int:
    entrants = rng.integers(0, fitness.size, size=size)
    return int(entrants[np.argmin(fitness[entrants])])


def breed(
    population: FloatArray,
    fitness: FloatArray,
    space: ParameterSpace,
    operators: GeneticOperators,
    rng: np.random.Generator,
) -> FloatArray:
    first = population[tournament(fitness, operators.tournament_size, rng)]
    second = population[tournament(fitness, operators.tournament_size, rng)]

    if rng.random() < operators.crossover_rate:
        child = np.where(rng.random(space.dimension) < 0.5, first, second)
    else:
        child = first.copy()

    mutate = rng.random(space.dimension) < operators.mutation_rate
    noise = rng.normal(0.0, operators.mutation_scale * space.width)
    child = child + np.where(mutate, noise, 0.0)

    return space.clip(child)


def genetic_algorithm(
    objective: Objective,
    space: ParameterSpace,
    population_size: int,
    generations: int,
    seed: int,
    *,
    operators: Optional[GeneticOperators] = None,
    mapper: Mapper = serial_map,
    config: Optional[dict[str, Any]] = None,
) -> CalibrationExperiment:
    """Real-coded genetic algorithm over the genes of ``space``.

    Tournament selection, uniform crossover and per-gene Gaussian mutation; the best
    ``elites`` individuals survive unchanged with their cached fitness. Every gene is
    clipped to the bounds.
    """
    operators = operators or GeneticOperators()
    elites = min(operators.elites, population_size)
    rng = np.random.default_rng(seed)

    population = space.sample(rng, population_size)
    fitness = np.array(mapper(objective, list(population)), dtype=np.float64)
    evaluations = population_size

    trajectory = [_trajectory_point(0, population, fitness, space)]

    for generation in range(1, generations + 1):
        order = np.argsort(fitness, kind="stable")
        survivors = population[order[:elites]]
        survivor_fitness = fitness[order[:elites]]

        children = np.array(
            [
                breed(population, fitness, space, operators, rng)
                for _ in range(population_size - elites)
            ]
        ).reshape(-1, space.dimension)
        child_fitness = np.array(mapper(objective, list(children)), dtype=np.float64)
        evaluations += len(children)

        population = np.vstack([survivors, children])
        fitness = np.concatenate([survivor_fitness, child_fitness])
        trajectory.append(_trajectory_point(generation, population, fitness, space))

        logger.debug(
            f"Generation '{generation}' best objective '{trajectory[-1].best_objective:.6g}'"
        )

    best = int(np.argmin(fitness))
    logger.info(
        f"Genetic algorithm seed '{seed}' finished: objective "
        f"'{trajectory[0].best_objective:.6g}' -> '{fitness[best]:.6g}'"
    )

    return CalibrationExperiment(
        method=CalibrationMethod.GA,
        seed=seed,
        free_parameters=list(space.parameters),
        config={
            "population": population_size,
            "generations": generations,
            **msgspec.structs.asdict(operators),
            **(config or {}),
        },
        trajectory=trajectory,
        final_params=space.effective(population[best]),
        final_objective=float(fitness[best]),
        evaluations=evaluations,
    )


def _trajectory_point(
    iteration: int,
    population: FloatArray,
    fitness: FloatArray,
    space: ParameterSpace,
) -> TrajectoryPoint:
    best = int(np.argmin(fitness))
    return TrajectoryPoint(
        iteration=iteration,
        best_objective=float(fitness[best]),
        best_params=space.effective(population[best]),
    )
