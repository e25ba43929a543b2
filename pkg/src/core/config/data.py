from datetime import time
from typing import Self

from pydantic import BaseModel, Field, model_validator

from src.core.constants import DEFAULT_TICK_SIZE, SESSION_END, SESSION_START

from .validators import validate_session_window


class DataConfig(BaseModel):
    session_start: time = SESSION_START
    session_end: time = SESSION_END
    tick_size: float = Field(default=DEFAULT_TICK_SIZE, gt=0.0)
    quote_lag_ms: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def validate_window(self) -> Self:
        validate_session_window(self.session_start, self.session_end)
        return self
