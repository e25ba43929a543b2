import math
from typing import Final, Iterable

from pydantic import Field

from src.core.config import SimulationConfig
from src.core.constants import Q_VAR_STEPS
from src.core.enums import FreeParameter, InitReference, PlacementMode

from .base import BaseDto

# Guards floor(rate * N_A) against products such as 0.29 * 100 = 28.999999999999996
ACTIVITY_EPSILON: Final[float] = 1e-9


class ModelParams(BaseDto):
    n_agents: int = Field(default=250, gt=0)
    delta: float = Field(default=0.0250, ge=0.0, le=1.0)
    lambda0: float = Field(default=100.0, gt=0.0)
    c_lambda: int = Field(default=10, ge=0)
    delta_s: float = Field(default=0.0010, ge=0.0, le=1.0)
    alpha: float = Field(default=0.1500, ge=0.0, le=1.0)
    mu: float = Field(default=0.0250, ge=0.0, le=1.0)

    @property
    def provider_orders(self) -> int:
        return math.floor(self.alpha * self.n_agents + ACTIVITY_EPSILON)

    @property
    def taker_orders(self) -> int:
        return math.floor(self.mu * self.n_agents + ACTIVITY_EPSILON)

    def value(self, parameter: FreeParameter) -> float:
        return float(getattr(self, parameter.value))

    def free_values(self, parameters: Iterable[FreeParameter]) -> dict[str, float]:
        return {parameter.value: self.value(parameter) for parameter in parameters}

    @classmethod
    def default(cls) -> "ModelParams":
        return cls(
            n_agents=250,
            delta=0.0250,
            lambda0=100.0,
            c_lambda=10,
            delta_s=0.0010,
            alpha=0.1500,
            mu=0.0250,
        )

    @classmethod
    def calibrated(cls) -> "ModelParams":
        return cls(
            n_agents=250,
            delta=0.0733,
            lambda0=180.0,
            c_lambda=33,
            delta_s=0.0328,
            alpha=0.2129,
            mu=0.0653,
        )

    @classmethod
    def from_config(cls, config: SimulationConfig) -> "ModelParams":
        return cls(
            n_agents=config.n_agents,
            delta=config.delta,
            lambda0=config.lambda0,
            c_lambda=config.c_lambda,
            delta_s=config.delta_s,
            alpha=config.alpha,
            mu=config.mu,
        )


class RunConfig(BaseDto):
    steps: int = Field(default=2300, ge=1)
    p0: int = Field(default=10_000, ge=1)
    seed: int = Field(default=1, ge=0, lt=2**64)
    q_var_steps: int = Field(default=Q_VAR_STEPS, ge=1)
    tick_size: float = Field(default=1.0, gt=0.0)

    placement_mode: PlacementMode = PlacementMode.FIXED
    init_reference: InitReference = InitReference.FIXED
    init_cancellation: bool = False

    @classmethod
    def from_config(cls, config: SimulationConfig) -> "RunConfig":
        return cls(
            steps=config.steps,
            p0=config.p0,
            seed=config.seed,
            q_var_steps=config.q_var_steps,
            tick_size=config.tick_size,
            placement_mode=config.placement_mode,
            init_reference=config.init_reference,
            init_cancellation=config.init_cancellation,
        )
