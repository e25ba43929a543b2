from .app import AppConfig
from .bounds import ParamBounds, ParameterRange
from .data import DataConfig
from .objective import ObjectiveConfig
from .search import SearchConfig
from .simulation import SimulationConfig
from .statistics import StatisticsConfig

__all__ = [
    "AppConfig",
    "DataConfig",
    "ObjectiveConfig",
    "ParamBounds",
    "ParameterRange",
    "SearchConfig",
    "SimulationConfig",
    "StatisticsConfig",
]
