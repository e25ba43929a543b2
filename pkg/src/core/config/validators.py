from datetime import time
from typing import Any

from pydantic_core.core_schema import ValidationInfo

from src.core.enums import FreeParameter


def validate_session_window(start: time, end: time) -> None:
    if start >= end:
        raise ValueError(f"Session start '{start}' must be before session end '{end}'")


def validate_parameter_names(value: Any, info: ValidationInfo) -> list[FreeParameter]:
    field_name = info.field_name or "UNKNOWN_FIELD"

    if isinstance(value, str):
        value = [part.strip() for part in value.split(",") if part.strip()]

    try:
        parameters = [FreeParameter(name) for name in value]
    except ValueError as exception:
        raise ValueError(f"'{field_name}' contains an unknown parameter: {exception}")

    if not parameters:
        raise ValueError(f"'{field_name}' must name at least one parameter")

    if len(set(parameters)) != len(parameters):
        raise ValueError(f"'{field_name}' contains duplicate parameters")

    return parameters
