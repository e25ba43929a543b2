from typing import Any, Mapping


# repr gives the shortest round-tripping form and never uses locale separators
def format_float(value: float) -> str:
    return repr(float(value))


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def format_params_log(params: Mapping[str, Any]) -> str:
    return ", ".join(f"{key}={value:.4g}" for key, value in params.items())
