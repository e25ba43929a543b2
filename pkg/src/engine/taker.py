from typing import Final

import numpy as np

from src.core.constants import Q_TAKER_MEAN
from src.models import TakerState

# Float drift around 1/2 after symmetric steps is treated as sitting on the mean
MEAN_TOLERANCE: Final[float] = 1e-12


def next_q_taker(q_taker: float, delta_s: float, u: float) -> float:
    deviation = q_taker - Q_TAKER_MEAN

    if abs(deviation) <= MEAN_TOLERANCE:
        q_next = q_taker + delta_s if u < 0.5 else q_taker - delta_s
    else:
        toward = -1.0 if deviation > 0 else 1.0
        reversion_probability = 0.5 + abs(deviation)
        direction = toward if u < reversion_probability else -toward
        q_next = q_taker + direction * delta_s

    return min(1.0, max(0.0, q_next))


def step_q_taker(state: TakerState, delta_s: float, rng: np.random.Generator) -> TakerState:
    q_next = next_q_taker(state.q_taker, delta_s, rng.random())
    return TakerState(q_taker=q_next, q_var=state.q_var)


def estimate_q_variance(delta_s: float, q_var_steps: int, rng: np.random.Generator) -> float:
    if delta_s < 0:
        raise ValueError(f"Increment delta_s '{delta_s}' must be non-negative")

    if delta_s == 0:
        return 0.0

    draws = rng.random(q_var_steps)
    q_taker = Q_TAKER_MEAN
    total = 0.0

    for u in draws.tolist():
        q_taker = next_q_taker(q_taker, delta_s, u)
        total += (q_taker - Q_TAKER_MEAN) ** 2

    return total / q_var_steps
