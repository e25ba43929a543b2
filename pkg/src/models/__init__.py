from src.core.config.bounds import ParamBounds, ParameterRange

from .base import BaseDto
from .calibration import (
    BootstrapSource,
    CalibrationExperiment,
    EvaluationRecord,
    MomentComparison,
    ObjectiveResult,
    ObjectiveSpec,
    ParameterInterval,
    SurfaceRow,
    SurfaceStatistics,
    SurfaceTable,
    TrajectoryPoint,
    WeightMatrix,
)
from .manifest import RunManifest
from .market_data import BarSeries, PriceAlignment, SyntheticSpec, TickRecord
from .params import ModelParams, RunConfig
from .simulation import SimulationOutput, StepDiagnostics, TakerState, Trade
from .statistics import AcfReport, ConfidenceInterval, MomentVector, SignClassification

__all__ = [
    "AcfReport",
    "BarSeries",
    "BaseDto",
    "BootstrapSource",
    "CalibrationExperiment",
    "ConfidenceInterval",
    "EvaluationRecord",
    "ModelParams",
    "MomentComparison",
    "MomentVector",
    "ObjectiveResult",
    "ObjectiveSpec",
    "ParamBounds",
    "ParameterInterval",
    "ParameterRange",
    "PriceAlignment",
    "RunConfig",
    "RunManifest",
    "SignClassification",
    "SimulationOutput",
    "StepDiagnostics",
    "SurfaceRow",
    "SurfaceStatistics",
    "SurfaceTable",
    "SyntheticSpec",
    "TakerState",
    "TickRecord",
    "Trade",
    "TrajectoryPoint",
    "WeightMatrix",
]
