from pydantic import BaseModel, Field

from src.core.constants import BOOTSTRAP_BLOCK_LENGTH, BOOTSTRAP_RESAMPLES, WEIGHT_RIDGE
from src.core.enums import MomentBasis, ReplicationAggregation


class ObjectiveConfig(BaseModel):
    replications: int = Field(default=5, ge=1)
    seed_base: int = Field(default=1000, ge=0, lt=2**63)

    block_length: int = Field(default=BOOTSTRAP_BLOCK_LENGTH, ge=1)
    resamples: int = Field(default=BOOTSTRAP_RESAMPLES, ge=2)
    ridge: float = Field(default=WEIGHT_RIDGE, ge=0.0)
    bootstrap_seed: int = Field(default=7, ge=0)

    aggregation: ReplicationAggregation = ReplicationAggregation.AVERAGE_MOMENTS
    basis: MomentBasis = MomentBasis.LEVELS
