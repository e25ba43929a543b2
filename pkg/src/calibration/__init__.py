from .aggregate import aggregate_experiments
from .genetic import GeneticOperators, genetic_algorithm
from .nelder_mead import (
    ThresholdSchedule,
    initial_spread,
    minimize_nelder_mead_ta,
    nelder_mead_ta,
)
from .objective import (
    SimulatedMomentsObjective,
    build_objective_spec,
    build_weight_matrix,
    evaluate,
    moment_errors,
    simulate_moments,
    weight_matrix_from_covariance,
)
from .space import ALL_PARAMETERS, Mapper, ParameterSpace, serial_map
from .surface import sobol_2d, surface_scan, surface_statistics

__all__ = [
    "ALL_PARAMETERS",
    "GeneticOperators",
    "Mapper",
    "ParameterSpace",
    "SimulatedMomentsObjective",
    "ThresholdSchedule",
    "aggregate_experiments",
    "build_objective_spec",
    "build_weight_matrix",
    "evaluate",
    "genetic_algorithm",
    "initial_spread",
    "minimize_nelder_mead_ta",
    "moment_errors",
    "nelder_mead_ta",
    "serial_map",
    "simulate_moments",
    "sobol_2d",
    "surface_scan",
    "surface_statistics",
    "weight_matrix_from_covariance",
]
