from typing import Annotated

from pydantic import BaseModel, BeforeValidator, Field

from src.core.constants import (
    GA_CROSSOVER_RATE,
    GA_ELITES,
    GA_MUTATION_RATE,
    GA_MUTATION_SCALE,
    GA_TOURNAMENT_SIZE,
    THRESHOLD_FINAL_RATIO,
    THRESHOLD_FRACTION,
)
from src.core.enums import FreeParameter, ThresholdKind

from .bounds import ParamBounds
from .validators import validate_parameter_names

ParameterList = Annotated[list[FreeParameter], BeforeValidator(validate_parameter_names)]


class SearchConfig(BaseModel):
    seed: int = Field(default=42, ge=0)

    nm_iterations: int = Field(default=100, ge=1)
    nm_experiments: int = Field(default=20, ge=1)
    threshold_kind: ThresholdKind = ThresholdKind.GEOMETRIC
    threshold_fraction: float = Field(default=THRESHOLD_FRACTION, ge=0.0)
    threshold_final_ratio: float = Field(default=THRESHOLD_FINAL_RATIO, gt=0.0, lt=1.0)

    ga_population: int = Field(default=100, ge=2)
    ga_generations: int = Field(default=50, ge=1)
    ga_experiments: int = Field(default=8, ge=1)
    ga_parameters: ParameterList = [FreeParameter.LAMBDA0, FreeParameter.C_LAMBDA]
    ga_tournament_size: int = Field(default=GA_TOURNAMENT_SIZE, ge=1)
    ga_crossover_rate: float = Field(default=GA_CROSSOVER_RATE, ge=0.0, le=1.0)
    ga_mutation_rate: float = Field(default=GA_MUTATION_RATE, ge=0.0, le=1.0)
    ga_mutation_scale: float = Field(default=GA_MUTATION_SCALE, gt=0.0)
    ga_elites: int = Field(default=GA_ELITES, ge=0)

    surface_points: int = Field(default=1000, ge=1)

    bounds: ParamBounds = Field(default_factory=ParamBounds)
