from .bars import align_scale, bars_1min, bars_from_log_prices, read_bars, write_bars
from .synthetic import synthesize_model, synthesize_ticks, synthesize_walk
from .ticks import in_session, parse_ticks, serialize_ticks, session_filter

__all__ = [
    "align_scale",
    "bars_1min",
    "bars_from_log_prices",
    "in_session",
    "parse_ticks",
    "read_bars",
    "serialize_ticks",
    "session_filter",
    "synthesize_model",
    "synthesize_ticks",
    "synthesize_walk",
    "write_bars",
]
