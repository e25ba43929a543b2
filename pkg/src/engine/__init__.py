from .book import LimitOrderBook
from .model import (
    OrderHook,
    PreisSimulation,
    SnapshotHook,
    StepResult,
    TakerOutcome,
    initialize_book,
    place_taker_orders,
    run_mc_step,
    simulate,
)
from .provider import (
    FixedReference,
    ProviderOutcome,
    activity_count,
    draw_eta,
    draw_etas,
    limit_price,
    place_provider_orders,
    placement_depth,
)
from .random import Streams, open_uniform, open_uniforms, substreams
from .taker import estimate_q_variance, next_q_taker, step_q_taker

__all__ = [
    "FixedReference",
    "LimitOrderBook",
    "OrderHook",
    "PreisSimulation",
    "ProviderOutcome",
    "SnapshotHook",
    "StepResult",
    "Streams",
    "TakerOutcome",
    "activity_count",
    "draw_eta",
    "draw_etas",
    "estimate_q_variance",
    "initialize_book",
    "limit_price",
    "next_q_taker",
    "open_uniform",
    "open_uniforms",
    "place_provider_orders",
    "place_taker_orders",
    "placement_depth",
    "run_mc_step",
    "simulate",
    "step_q_taker",
    "substreams",
]
