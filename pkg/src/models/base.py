from typing import Any, Self

from pydantic import BaseModel as _BaseModel
from pydantic import ConfigDict


class BaseDto(_BaseModel):
    model_config = ConfigDict(
        extra="ignore",
        from_attributes=True,
        populate_by_name=True,
        frozen=True,
    )

    def with_values(self, **updates: Any) -> Self:
        return self.model_validate({**self.model_dump(), **updates})
