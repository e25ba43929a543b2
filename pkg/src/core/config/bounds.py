from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.enums import FreeParameter
from src.core.utils.types import FloatArray


class ParameterRange(BaseModel):
    model_config = ConfigDict(frozen=True)

    lower: float
    upper: float

    @model_validator(mode="after")
    def validate_order(self) -> Self:
        if not self.lower < self.upper:
            raise ValueError(f"Lower bound '{self.lower}' must be below upper '{self.upper}'")
        return self

    @property
    def width(self) -> float:
        return self.upper - self.lower


class ParamBounds(BaseModel):
    """Search box per free parameter, overridable as ``[search.bounds.<name>]``."""

    model_config = ConfigDict(frozen=True)

    delta: ParameterRange = Field(default=ParameterRange(lower=0.0, upper=0.1))
    lambda0: ParameterRange = Field(default=ParameterRange(lower=0.0, upper=200.0))
    c_lambda: ParameterRange = Field(default=ParameterRange(lower=0.0, upper=20.0))
    delta_s: ParameterRange = Field(default=ParameterRange(lower=0.0, upper=0.1))
    alpha: ParameterRange = Field(default=ParameterRange(lower=0.1, upper=0.5))
    mu: ParameterRange = Field(default=ParameterRange(lower=0.0, upper=0.1))

    def of(self, parameter: FreeParameter) -> ParameterRange:
        bounds: ParameterRange = getattr(self, parameter.value)
        return bounds

    def lower(self, parameters: tuple[FreeParameter, ...]) -> FloatArray:
        return np.array([self.of(p).lower for p in parameters])

    def upper(self, parameters: tuple[FreeParameter, ...]) -> FloatArray:
        return np.array([self.of(p).upper for p in parameters])
