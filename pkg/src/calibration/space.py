from typing import Callable, Final, Sequence, TypeVar

import numpy as np

from src.core.constants import LAMBDA0_FLOOR
from src.core.enums import FreeParameter
from src.core.utils.types import FloatArray
from src.models import ModelParams, ParamBounds

T = TypeVar("T")
R = TypeVar("R")

# Order-preserving map; the worker pool's map satisfies it
Mapper = Callable[[Callable[[T], R], Sequence[T]], list[R]]

ALL_PARAMETERS: Final[tuple[FreeParameter, ...]] = tuple(FreeParameter)


def serial_map(function: Callable[[T], R], items: Sequence[T]) -> list[R]:
    return [function(item) for item in items]


class ParameterSpace:
    """Continuous search coordinates over a subset of the free parameters.

    Bounds define where searches are initialized; ``project`` only enforces physical
    validity, so Nelder-Mead iterates may leave the initialization box.
    """

    def __init__(
        self,
        parameters: Sequence[FreeParameter],
        bounds: ParamBounds,
        base: ModelParams,
    ) -> None:
        if not parameters:
            raise ValueError("At least one free parameter is required")
        if len(set(parameters)) != len(parameters):
            raise ValueError("Free parameters must be unique")

        self.parameters = tuple(parameters)
        self.bounds = bounds
        self.base = base
        self.lower = bounds.lower(self.parameters)
        self.upper = bounds.upper(self.parameters)

    @property
    def dimension(self) -> int:
        return len(self.parameters)

    @property
    def width(self) -> FloatArray:
        return self.upper - self.lower

    def sample(self, rng: np.random.Generator, size: int) -> FloatArray:
        return self.lower + rng.random((size, self.dimension)) * self.width

    def from_unit(self, points: FloatArray) -> FloatArray:
        return self.lower + points * self.width

    def to_unit(self, points: FloatArray) -> FloatArray:
        return (points - self.lower) / self.width

    def clip(self, x: FloatArray) -> FloatArray:
        return np.clip(x, self.lower, self.upper)

    def project(self, x: FloatArray) -> FloatArray:
        projected = np.array(x, dtype=np.float64)

        for i, parameter in enumerate(self.parameters):
            if parameter.is_probability:
                projected[i] = min(1.0, max(0.0, projected[i]))
            elif parameter is FreeParameter.LAMBDA0:
                projected[i] = max(LAMBDA0_FLOOR, projected[i])
            elif parameter is FreeParameter.C_LAMBDA:
                projected[i] = max(0.0, projected[i])

        return projected

    def to_params(self, x: FloatArray) -> ModelParams:
        values = self.as_dict(self.project(x))
        if FreeParameter.C_LAMBDA.value in values:
            values[FreeParameter.C_LAMBDA.value] = round(values[FreeParameter.C_LAMBDA.value])
        return self.base.with_values(**values)

    def as_dict(self, x: FloatArray) -> dict[str, float]:
        return {parameter.value: float(v) for parameter, v in zip(self.parameters, x)}

    def from_params(self, params: ModelParams) -> FloatArray:
        return np.array([params.value(parameter) for parameter in self.parameters])

    def effective(self, x: FloatArray) -> dict[str, float]:
        # The values a simulation actually runs with after projection and rounding
        return self.to_params(x).free_values(self.parameters)
