from pydantic import BaseModel, Field

from src.core.constants import Q_VAR_STEPS
from src.core.enums import InitReference, PlacementMode


class SimulationConfig(BaseModel):
    n_agents: int = Field(default=250, gt=0)
    delta: float = Field(default=0.0250, ge=0.0, le=1.0)
    lambda0: float = Field(default=100.0, gt=0.0)
    c_lambda: int = Field(default=10, ge=0)
    delta_s: float = Field(default=0.0010, ge=0.0, le=1.0)
    alpha: float = Field(default=0.1500, ge=0.0, le=1.0)
    mu: float = Field(default=0.0250, ge=0.0, le=1.0)

    steps: int = Field(default=2300, ge=1)
    p0: int = Field(default=10_000, ge=1)
    seed: int = Field(default=1, ge=0, lt=2**64)
    q_var_steps: int = Field(default=Q_VAR_STEPS, ge=1)
    tick_size: float = Field(default=1.0, gt=0.0)

    placement_mode: PlacementMode = PlacementMode.FIXED
    init_reference: InitReference = InitReference.FIXED
    init_cancellation: bool = False
