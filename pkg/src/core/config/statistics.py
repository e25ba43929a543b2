from typing import Self

from pydantic import BaseModel, Field, model_validator

from src.core.constants import ACF_MAX_LAG, HURST_TAU_MAX, HURST_TAU_MIN


class StatisticsConfig(BaseModel):
    hurst_tau_min: int = Field(default=HURST_TAU_MIN, ge=1)
    hurst_tau_max: int = Field(default=HURST_TAU_MAX, ge=2)
    acf_max_lag: int = Field(default=ACF_MAX_LAG, ge=1)

    @model_validator(mode="after")
    def validate_tau_range(self) -> Self:
        if self.hurst_tau_max <= self.hurst_tau_min:
            raise ValueError("hurst_tau_max must exceed hurst_tau_min")
        return self
