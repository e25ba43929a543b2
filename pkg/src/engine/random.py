from typing import Final, NamedTuple

import numpy as np

from src.core.utils.types import FloatArray

Q_VARIANCE_STREAM: Final[int] = 0
INITIALIZATION_STREAM: Final[int] = 1
MAIN_STREAM: Final[int] = 2


class Streams(NamedTuple):
    q_variance: np.random.Generator
    initialization: np.random.Generator
    main: np.random.Generator


def substreams(seed: int) -> Streams:
    # Fixed offsets keep the main loop independent of the pre-pass length
    return Streams(
        q_variance=np.random.default_rng([seed, Q_VARIANCE_STREAM]),
        initialization=np.random.default_rng([seed, INITIALIZATION_STREAM]),
        main=np.random.default_rng([seed, MAIN_STREAM]),
    )


def open_uniform(rng: np.random.Generator) -> float:
    u = rng.random()
    while u == 0.0:
        u = rng.random()
    return u


def open_uniforms(rng: np.random.Generator, size: int) -> FloatArray:
    u = rng.random(size)
    zeros = u == 0.0
    while zeros.any():
        u[zeros] = rng.random(int(zeros.sum()))
        zeros = u == 0.0
    return u
