import math
from typing import Sequence

import numpy as np
import numpy.typing as npt
from loguru import logger

from src.core.constants import ACF_MAX_LAG, NOISE_BAND_Z
from src.core.exceptions import DegenerateSeriesError
from src.models import AcfReport


def noise_band(observations: int) -> float:
    return NOISE_BAND_Z / math.sqrt(observations)


def acf_values(signs: npt.ArrayLike, max_lag: int = ACF_MAX_LAG) -> npt.NDArray[np.float64]:
    x = np.asarray(signs, dtype=np.float64)

    if max_lag < 1:
        raise ValueError(f"max_lag '{max_lag}' must be at least 1")
    if x.size <= max_lag:
        raise DegenerateSeriesError(
            f"Series of length '{x.size}' is too short for max_lag '{max_lag}'"
        )

    centered = x - x.mean()
    variance = float(centered @ centered)

    # A constant series is reported as perfectly correlated instead of raising
    if variance == 0:
        return np.ones(max_lag)

    return np.array([centered[:-k] @ centered[k:] / variance for k in range(1, max_lag + 1)])


def acf(signs: npt.ArrayLike, max_lag: int = ACF_MAX_LAG) -> AcfReport:
    values = acf_values(signs, max_lag)
    observations = int(np.asarray(signs).size)
    return AcfReport(
        lags=np.arange(1, max_lag + 1),
        values=values,
        noise_band=noise_band(observations),
        observations=observations,
    )


def ensemble_acf(runs: Sequence[npt.ArrayLike], max_lag: int = ACF_MAX_LAG) -> AcfReport:
    """Average the per-run ACFs; the band uses the mean trade count per run."""
    usable = [np.asarray(run) for run in runs if np.asarray(run).size > max_lag]

    if len(usable) < len(runs):
        logger.warning(
            f"Dropped '{len(runs) - len(usable)}' runs with at most '{max_lag}' trades"
        )
    if not usable:
        raise ValueError("No run has enough trades for the requested lags")

    values = np.mean([acf_values(run, max_lag) for run in usable], axis=0)
    observations = round(float(np.mean([run.size for run in usable])))

    return AcfReport(
        lags=np.arange(1, max_lag + 1),
        values=values,
        noise_band=noise_band(observations),
        observations=observations,
    )
