from typing import Callable

import numpy as np
import pytest

from src.analysis import t_critical
from src.calibration import (
    ParameterSpace,
    SimulatedMomentsObjective,
    ThresholdSchedule,
    aggregate_experiments,
    build_objective_spec,
    build_weight_matrix,
    evaluate,
    genetic_algorithm,
    initial_spread,
    minimize_nelder_mead_ta,
    moment_errors,
    nelder_mead_ta,
    sobol_2d,
    surface_scan,
    surface_statistics,
    weight_matrix_from_covariance,
)
from src.core.constants import PENALTY_SCALE
from src.core.enums import CalibrationMethod, FreeParameter, ReplicationAggregation
from src.core.exceptions import ConfigurationError
from src.engine import simulate
from src.models import (
    CalibrationExperiment,
    ModelParams,
    MomentVector,
    ObjectiveSpec,
    ParamBounds,
    RunConfig,
    WeightMatrix,
)

PAIR = (FreeParameter.LAMBDA0, FreeParameter.C_LAMBDA)


def sphere(center: np.ndarray) -> Callable[[np.ndarray], float]:
    return lambda x: float(np.sum((np.asarray(x) - center) ** 2))


def experiment(value: float, seed: int = 0) -> CalibrationExperiment:
    return CalibrationExperiment(
        method=CalibrationMethod.GA,
        seed=seed,
        free_parameters=[FreeParameter.LAMBDA0],
        config={},
        trajectory=[],
        final_params={"lambda0": value},
        final_objective=0.0,
        evaluations=1,
    )


@pytest.fixture
def pseudo_spec(
    default_params: ModelParams,
    small_run: RunConfig,
    identity_weights: WeightMatrix,
) -> ObjectiveSpec:
    empirical = simulate(default_params, small_run.with_values(seed=1000)).log_prices
    return build_objective_spec(empirical, identity_weights, small_run, replications=1)


def test_identity_covariance_gives_identity_weights() -> None:
    weights = weight_matrix_from_covariance(np.eye(5), 0.0)
    np.testing.assert_allclose(weights.matrix, np.eye(5))


def test_diagonal_covariance_is_inverted() -> None:
    weights = weight_matrix_from_covariance(np.diag([4.0, 1, 1, 1, 1]), 0.0)

    np.testing.assert_allclose(weights.matrix, np.diag([0.25, 1, 1, 1, 1]))
    assert weights.penalty == PENALTY_SCALE * 2.0


def test_quadratic_form_of_mean_error(identity_weights: WeightMatrix) -> None:
    errors = np.array([0.1, 0.0, 0.0, 0.0, 0.0])
    assert identity_weights.quadratic_form(errors) == pytest.approx(0.01)


def test_bootstrap_weights_are_symmetric(rng: np.random.Generator) -> None:
    series = 5.5 + 0.001 * np.cumsum(rng.standard_normal(1_000))

    weights = build_weight_matrix(series, block_length=100, resamples=60, ridge=1e-6, seed=7)

    np.testing.assert_allclose(weights.matrix, weights.matrix.T)
    assert np.all(np.diag(weights.matrix) > 0)
    assert weights.source is not None and weights.source.resamples == 60


def test_bootstrap_needs_ten_blocks(rng: np.random.Generator) -> None:
    with pytest.raises(ConfigurationError):
        build_weight_matrix(rng.standard_normal(500), 100, 10, 1e-6, 7)


def test_spec_length_must_match_run(
    identity_weights: WeightMatrix,
    small_run: RunConfig,
    rng: np.random.Generator,
) -> None:
    with pytest.raises(ConfigurationError):
        build_objective_spec(rng.standard_normal(200), identity_weights, small_run)


def test_objective_is_zero_at_the_generating_seed(
    default_params: ModelParams,
    pseudo_spec: ObjectiveSpec,
) -> None:
    result = evaluate(default_params, pseudo_spec)

    assert result.penalized is False
    assert result.value == pytest.approx(0.0, abs=1e-20)


def test_objective_is_non_negative(best_params: ModelParams, pseudo_spec: ObjectiveSpec) -> None:
    result = evaluate(best_params, pseudo_spec)

    assert result.value > 0
    assert len(result.moments) == 1


def test_zero_increment_is_penalized(
    default_params: ModelParams,
    pseudo_spec: ObjectiveSpec,
) -> None:
    result = evaluate(default_params.with_values(delta_s=0.0), pseudo_spec)

    assert result.penalized is True
    assert result.value == pseudo_spec.penalty
    assert result.reason is not None


def test_replication_aggregation_modes(default_params: ModelParams, small_run: RunConfig) -> None:
    empirical = simulate(default_params, small_run.with_values(seed=77)).log_prices
    weights = WeightMatrix(matrix=np.eye(5), ridge=0.0)
    averaged = build_objective_spec(empirical, weights, small_run, replications=3)
    per_replication = build_objective_spec(
        empirical,
        weights,
        small_run,
        replications=3,
        aggregation=ReplicationAggregation.AVERAGE_OBJECTIVES,
    )

    first = evaluate(default_params, averaged)
    second = evaluate(default_params, per_replication)

    assert [m.as_array().tolist() for m in first.moments] == [
        m.as_array().tolist() for m in second.moments
    ]
    # Jensen: the mean of quadratic forms bounds the form of the mean
    assert second.value >= first.value


@pytest.mark.slow
def test_more_replications_steady_the_objective(
    default_params: ModelParams, best_params: ModelParams, small_run: RunConfig
) -> None:
    empirical = simulate(default_params, small_run.with_values(seed=77)).log_prices
    weights = WeightMatrix(matrix=np.eye(5), ridge=0.0)

    def spread(replications: int) -> float:
        values = [
            evaluate(
                best_params,
                build_objective_spec(
                    empirical,
                    weights,
                    small_run,
                    replications=replications,
                    seed_base=5_000 + 50 * k,
                ),
            ).value
            for k in range(12)
        ]
        return float(np.var(values))

    one, five, twenty = spread(1), spread(5), spread(20)

    assert one > five > twenty


def test_moment_errors_subtract_target() -> None:
    simulated = MomentVector(mean=1.0, std=2.0, kurtosis=3.0, ks=0.2, hurst=0.6)
    target = MomentVector(mean=0.5, std=2.0, kurtosis=2.0, ks=0.0, hurst=0.5)

    np.testing.assert_allclose(moment_errors(simulated, target), [0.5, 0.0, 1.0, 0.2, 0.1])


def test_objective_records_history(pseudo_spec: ObjectiveSpec) -> None:
    space = ParameterSpace(PAIR, ParamBounds(), ModelParams.default())
    objective = SimulatedMomentsObjective(space, pseudo_spec, record=True)

    value = objective(np.array([120.0, 12.4]))

    assert len(objective.history) == 1
    assert objective.history[0].params == {"lambda0": 120.0, "c_lambda": 12.0}
    assert objective.history[0].result.value == value


#


def test_space_projects_to_physical_validity() -> None:
    space = ParameterSpace(
        (FreeParameter.DELTA, FreeParameter.LAMBDA0, FreeParameter.C_LAMBDA),
        ParamBounds(),
        ModelParams.default(),
    )

    params = space.to_params(np.array([-0.2, -5.0, 32.6]))

    assert params.delta == 0.0
    assert params.lambda0 > 0.0
    assert params.c_lambda == 33


def test_space_rejects_duplicates() -> None:
    with pytest.raises(ValueError):
        ParameterSpace((FreeParameter.MU, FreeParameter.MU), ParamBounds(), ModelParams())


def test_threshold_schedule_decays_to_zero() -> None:
    thresholds = ThresholdSchedule().thresholds(spread=50.0, iterations=100)

    assert thresholds[0] == pytest.approx(5.0)
    assert thresholds[-1] == 0.0
    assert np.all(np.diff(thresholds) <= 0)


def test_initial_spread_ignores_penalized_vertices() -> None:
    values = np.array([2.0, PENALTY_SCALE, 5.0, np.inf])

    assert initial_spread(values, penalty=PENALTY_SCALE) == 3.0
    assert initial_spread(values) == PENALTY_SCALE - 2.0
    assert initial_spread(np.array([1.0, PENALTY_SCALE]), penalty=PENALTY_SCALE) == 0.0


def test_penalized_start_does_not_inflate_thresholds() -> None:
    def walled(x: np.ndarray) -> float:
        return PENALTY_SCALE if x[0] > 0.5 else float(np.sum(x**2))

    simplex = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    result = minimize_nelder_mead_ta(
        walled, simplex, 20, ThresholdSchedule(), penalty=PENALTY_SCALE
    )

    assert result.thresholds[0] == pytest.approx(0.1)
    assert result.thresholds[-1] == 0.0


def test_nelder_mead_converges_on_quadratic(rng: np.random.Generator) -> None:
    center = np.array([0.3, 0.7])
    result = minimize_nelder_mead_ta(
        sphere(center),
        rng.random((3, 2)),
        100,
        ThresholdSchedule.zero(),
    )

    assert np.linalg.norm(result.best - center) < 1e-3


@pytest.mark.slow
def test_nelder_mead_converges_in_six_dimensions(rng: np.random.Generator) -> None:
    center = rng.random(6)
    result = minimize_nelder_mead_ta(
        sphere(center),
        rng.random((7, 6)),
        1_000,
        ThresholdSchedule.zero(),
    )

    assert np.linalg.norm(result.best - center) < 1e-3


def test_nelder_mead_best_never_increases(rng: np.random.Generator) -> None:
    result = minimize_nelder_mead_ta(
        sphere(np.full(6, 0.5)),
        rng.random((7, 6)),
        100,
        ThresholdSchedule.zero(),
    )
    values = [value for _, value, _ in result.trajectory]

    assert len(values) == 101
    assert all(b <= a for a, b in zip(values, values[1:]))


def test_threshold_accepting_never_regresses(rng: np.random.Generator) -> None:
    def bumpy(x: np.ndarray) -> float:
        return float(np.sum(x**2) + 0.1 * np.sum(np.sin(25 * x) ** 2))

    result = minimize_nelder_mead_ta(bumpy, rng.random((7, 6)), 100, ThresholdSchedule())

    assert result.best_value <= result.trajectory[0][1]


def test_nelder_mead_experiment_artifact() -> None:
    space = ParameterSpace(PAIR, ParamBounds(), ModelParams.calibrated())
    center = np.array([150.0, 10.0])

    result = nelder_mead_ta(sphere(center), space, 50, ThresholdSchedule(), seed=4)

    assert result.method is CalibrationMethod.NM
    assert set(result.final_params) == {"lambda0", "c_lambda"}
    assert result.config["thresholds"][-1] == 0.0
    assert result.final_objective <= result.initial_objective


def test_genetic_algorithm_finds_sphere_minimum() -> None:
    space = ParameterSpace(PAIR, ParamBounds(), ModelParams.calibrated())
    center = np.array([130.0, 7.0])

    def scaled(x: np.ndarray) -> float:
        return float(np.sum(((x - center) / space.width) ** 2))

    result = genetic_algorithm(scaled, space, population_size=100, generations=50, seed=9)
    found = np.array([result.final_params["lambda0"], result.final_params["c_lambda"]])

    assert np.all(np.abs(found - center) <= 0.01 * space.width + 0.5 * np.array([0, 1]))


def test_genetic_algorithm_respects_bounds() -> None:
    space = ParameterSpace(PAIR, ParamBounds(), ModelParams.calibrated())
    seen: list[np.ndarray] = []

    def outside(x: np.ndarray) -> float:
        seen.append(np.array(x))
        return float(-np.sum(x))

    genetic_algorithm(outside, space, population_size=20, generations=10, seed=2)

    points = np.vstack(seen)
    assert np.all(points >= space.lower) and np.all(points <= space.upper)


def test_elite_objective_never_increases() -> None:
    space = ParameterSpace(PAIR, ParamBounds(), ModelParams.calibrated())
    result = genetic_algorithm(sphere(np.array([90.0, 4.0])), space, 30, 20, seed=5)
    values = [point.best_objective for point in result.trajectory]

    assert all(b <= a for a, b in zip(values, values[1:]))


#


def test_sobol_leading_points() -> None:
    np.testing.assert_allclose(sobol_2d(3), [[0.5, 0.5], [0.75, 0.25], [0.25, 0.75]])


def test_sobol_prefix_property() -> None:
    points = sobol_2d(1_000)

    assert len({tuple(p) for p in points.tolist()}) == 1_000
    assert np.all((points >= 0) & (points < 1))
    np.testing.assert_array_equal(sobol_2d(100), points[:100])


def test_surface_scan_of_analytic_objective() -> None:
    space = ParameterSpace(PAIR, ParamBounds(), ModelParams.calibrated())

    table = surface_scan(lambda x: float(x[0] + x[1]), space, 4)

    assert [(row.x, row.y) for row in table.rows] == [
        (100.0, 10.0),
        (150.0, 5.0),
        (50.0, 15.0),
        (75.0, 7.5),
    ]
    assert [row.objective for row in table.rows] == [110.0, 155.0, 65.0, 82.5]
    assert table.pair == PAIR


def test_surface_statistics_locate_minimum_region() -> None:
    space = ParameterSpace(PAIR, ParamBounds(), ModelParams.calibrated())
    center = np.array([180.0, 15.0])

    def bowl(x: np.ndarray) -> float:
        return float(np.sum(((x - center) / space.width) ** 2))

    flat = lambda x: 1.0 + 1e-3 * float(np.sin(x[0]) + np.cos(x[1]))  # noqa: E731

    bowl_stats = surface_statistics(surface_scan(bowl, space, 100), space)
    flat_stats = surface_statistics(surface_scan(flat, space, 100), space)

    assert bowl_stats.cluster_ratio < 0.5
    assert bowl_stats.flatness > flat_stats.flatness


#


def test_aggregate_identical_experiments() -> None:
    intervals = aggregate_experiments([experiment(150.0) for _ in range(20)])

    assert len(intervals) == 1
    assert intervals[0].interval.lower == intervals[0].interval.upper == 150.0


def test_aggregate_matches_hand_computation() -> None:
    values = [190.0, 195.5, 193.0, 197.25, 192.0, 196.0, 194.5, 191.75]
    interval = aggregate_experiments([experiment(v, i) for i, v in enumerate(values)])[0]

    mean = sum(values) / 8
    std_err = (sum((v - mean) ** 2 for v in values) / 7) ** 0.5 / 8**0.5
    half_width = t_critical(8) * std_err

    assert interval.parameter is FreeParameter.LAMBDA0
    assert interval.interval.mean == pytest.approx(mean, rel=1e-12)
    assert interval.interval.std_err == pytest.approx(std_err, rel=1e-12)
    assert interval.interval.lower == pytest.approx(mean - half_width, rel=1e-12)


def test_aggregate_rejects_single_experiment() -> None:
    with pytest.raises(ValueError):
        aggregate_experiments([experiment(1.0)])
