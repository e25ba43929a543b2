import math

import numpy as np
import numpy.typing as npt
from scipy import stats

from src.core.constants import CONFIDENCE_LEVEL
from src.models import ConfidenceInterval


def t_critical(n: int, level: float = CONFIDENCE_LEVEL) -> float:
    return float(stats.t.ppf((1 + level) / 2, n - 1))


def confidence_interval(
    samples: npt.ArrayLike,
    level: float = CONFIDENCE_LEVEL,
) -> ConfidenceInterval:
    values = np.asarray(samples, dtype=np.float64)
    n = int(values.size)

    if n < 2:
        raise ValueError(f"Confidence interval needs at least two samples, got '{n}'")
    if not 0 < level < 1:
        raise ValueError(f"Confidence level '{level}' is outside (0, 1)")

    mean = float(values.mean())
    std_err = float(values.std(ddof=1)) / math.sqrt(n)
    half_width = t_critical(n, level) * std_err

    return ConfidenceInterval(
        lower=mean - half_width,
        upper=mean + half_width,
        mean=mean,
        std_err=std_err,
        n=n,
    )
