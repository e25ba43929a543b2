from functools import partial
from typing import NamedTuple, Sequence

import numpy as np
from loguru import logger

from src.analysis import MOMENT_NAMES, confidence_interval
from src.calibration import (
    GeneticOperators,
    ParameterSpace,
    SimulatedMomentsObjective,
    ThresholdSchedule,
    aggregate_experiments,
    build_objective_spec,
    build_weight_matrix,
    genetic_algorithm,
    nelder_mead_ta,
    simulate_moments,
)
from src.core.config import SearchConfig
from src.core.enums import CalibrationMethod, FreeParameter
from src.core.exceptions import DataError
from src.core.utils.formatters import format_params_log
from src.data import align_scale
from src.models import (
    BarSeries,
    CalibrationExperiment,
    EvaluationRecord,
    ModelParams,
    MomentComparison,
    ObjectiveSpec,
    ParameterInterval,
    RunConfig,
)

from .base import BaseService


class ExperimentJob(NamedTuple):
    method: CalibrationMethod
    seed: int
    space: ParameterSpace
    spec: ObjectiveSpec
    search: SearchConfig


class ExperimentOutcome(NamedTuple):
    experiment: CalibrationExperiment
    history: list[EvaluationRecord]


def run_experiment(job: ExperimentJob) -> ExperimentOutcome:
    objective = SimulatedMomentsObjective(job.space, job.spec, record=True)
    search = job.search
    recorded = {
        "replications": job.spec.replications,
        "seed_base": job.spec.seed_base,
        "steps": job.spec.run.steps,
        "aggregation": job.spec.aggregation.value,
        "basis": job.spec.basis.value,
        "base_params": job.space.base.model_dump(),
    }

    if job.method is CalibrationMethod.NM:
        schedule = ThresholdSchedule(
            kind=search.threshold_kind,
            fraction=search.threshold_fraction,
            final_ratio=search.threshold_final_ratio,
        )
        experiment = nelder_mead_ta(
            objective,
            job.space,
            search.nm_iterations,
            schedule,
            job.seed,
            penalty=job.spec.penalty,
            config=recorded,
        )
    else:
        operators = GeneticOperators(
            tournament_size=search.ga_tournament_size,
            crossover_rate=search.ga_crossover_rate,
            mutation_rate=search.ga_mutation_rate,
            mutation_scale=search.ga_mutation_scale,
            elites=search.ga_elites,
        )
        experiment = genetic_algorithm(
            objective,
            job.space,
            search.ga_population,
            search.ga_generations,
            job.seed,
            operators=operators,
            config=recorded,
        )

    return ExperimentOutcome(experiment=experiment, history=objective.history)


class CalibrationService(BaseService):
    def prepare(self, bars: BarSeries) -> ObjectiveSpec:
        """Align the simulator to the bars and build the weighted objective."""
        self.config.validate_bootstrap()
        steps = self.config.simulation.steps
        if bars.count < steps:
            raise DataError(f"Need '{steps}' bars for calibration, found '{bars.count}'")

        empirical = bars.log_prices[:steps]
        alignment = align_scale(bars, self.config.data.tick_size)
        run = RunConfig.from_config(self.config.simulation).with_values(
            p0=alignment.p0,
            tick_size=alignment.tick_size,
        )
        objective = self.config.objective
        tau_min = self.config.statistics.hurst_tau_min
        tau_max = self.config.statistics.hurst_tau_max

        weights = build_weight_matrix(
            empirical,
            objective.block_length,
            objective.resamples,
            objective.ridge,
            objective.bootstrap_seed,
            basis=objective.basis,
            tau_min=tau_min,
            tau_max=tau_max,
        )
        logger.info(
            f"Aligned to p0 '{alignment.p0}' at tick '{alignment.tick_size}', "
            f"weight matrix max diagonal '{weights.max_diagonal:.4g}'"
        )

        return build_objective_spec(
            empirical,
            weights,
            run,
            replications=objective.replications,
            seed_base=objective.seed_base,
            aggregation=objective.aggregation,
            basis=objective.basis,
            tau_min=tau_min,
            tau_max=tau_max,
        )

    def space(self, parameters: Sequence[FreeParameter], base: ModelParams) -> ParameterSpace:
        return ParameterSpace(parameters, self.config.search.bounds, base)

    def calibrate(
        self,
        method: CalibrationMethod,
        spec: ObjectiveSpec,
        space: ParameterSpace,
        experiments: int,
    ) -> list[ExperimentOutcome]:
        seeds = [self.config.search.seed + i for i in range(experiments)]
        jobs = [ExperimentJob(method, seed, space, spec, self.config.search) for seed in seeds]

        logger.info(
            f"Starting '{experiments}' '{method}' experiments over "
            f"'{', '.join(p.value for p in space.parameters)}' on '{self.pool.workers}' workers"
        )
        outcomes = self.pool.map(run_experiment, jobs)

        for outcome in outcomes:
            experiment = outcome.experiment
            params = format_params_log(experiment.final_params)
            logger.info(
                f"Experiment seed '{experiment.seed}': objective "
                f"'{experiment.final_objective:.6g}' at {params}"
            )

        return outcomes

    def intervals(self, experiments: Sequence[CalibrationExperiment]) -> list[ParameterInterval]:
        if len(experiments) < 2:
            logger.warning("Confidence intervals need at least two experiments, skipping")
            return []
        return aggregate_experiments(experiments)

    def compare_moments(
        self,
        params: ModelParams,
        spec: ObjectiveSpec,
        paths: int,
    ) -> list[MomentComparison]:
        """Confidence intervals of simulated moments next to the empirical targets."""
        seeds = [spec.seed_base + i for i in range(paths)]
        vectors = self.pool.map(partial(simulate_moments, params, spec), seeds)
        simulated = np.vstack([vector.as_array() for vector in vectors])
        target = spec.target.as_array()

        return [
            MomentComparison(
                name=name,
                simulated=confidence_interval(simulated[:, i]),
                empirical=float(target[i]),
            )
            for i, name in enumerate(MOMENT_NAMES)
        ]
