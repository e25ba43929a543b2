from typing import Final

import numpy as np
import numpy.typing as npt
from scipy import stats

from src.core.constants import HURST_TAU_MAX, HURST_TAU_MIN, MIN_HURST_LENGTH, MIN_MOMENT_LENGTH
from src.core.enums import MomentBasis
from src.core.exceptions import DegenerateSeriesError
from src.core.utils.types import FloatArray
from src.models import MomentVector

MOMENT_NAMES: Final[tuple[str, ...]] = ("m1", "m2", "m3", "m_ks", "m4")


def _as_series(values: npt.ArrayLike) -> FloatArray:
    return np.asarray(values, dtype=np.float64)


def kurtosis(series: npt.ArrayLike) -> float:
    """Raw (Pearson) standardized fourth moment with population normalization."""
    x = _as_series(series)
    if x.size < 2 or np.ptp(x) == 0:
        raise DegenerateSeriesError("Kurtosis is undefined for a constant series")
    return float(stats.kurtosis(x, fisher=False, bias=True))


def ks_statistic(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    sample_a, sample_b = _as_series(a), _as_series(b)
    if sample_a.size == 0 or sample_b.size == 0:
        raise ValueError("KS statistic needs two non-empty samples")
    # The asymptotic method skips the exact p-value, the statistic is identical
    result = stats.ks_2samp(sample_a, sample_b, method="asymp")
    return float(result.statistic)


def generalized_hurst(
    series: npt.ArrayLike,
    tau_min: int = HURST_TAU_MIN,
    tau_max: int = HURST_TAU_MAX,
) -> float:
    """First-order structure-function Hurst exponent.

    K(tau) is the mean absolute increment at lag tau; H is the least-squares slope of
    ln K against ln tau over ``tau_min..tau_max``.
    """
    x = _as_series(series)
    if x.size < max(MIN_HURST_LENGTH, tau_max + 1):
        raise DegenerateSeriesError(f"Hurst exponent needs at least '{MIN_HURST_LENGTH}' points")

    taus = np.arange(tau_min, tau_max + 1)
    structure = np.array([np.mean(np.abs(x[tau:] - x[:-tau])) for tau in taus])

    if np.any(structure <= 0):
        raise DegenerateSeriesError("Hurst exponent is undefined for a constant series")

    slope, _ = np.polyfit(np.log(taus), np.log(structure), 1)
    return float(slope)


def moments(
    series: npt.ArrayLike,
    empirical: npt.ArrayLike,
    *,
    basis: MomentBasis = MomentBasis.LEVELS,
    tau_min: int = HURST_TAU_MIN,
    tau_max: int = HURST_TAU_MAX,
) -> MomentVector:
    x = _as_series(series)
    if x.size < MIN_MOMENT_LENGTH:
        raise DegenerateSeriesError(
            f"Moments need at least '{MIN_MOMENT_LENGTH}' points, got '{x.size}'"
        )

    std = float(np.std(x, ddof=1))
    if std == 0:
        raise DegenerateSeriesError("Standard deviation is zero")

    kurtosis_input = np.diff(x) if basis is MomentBasis.RETURNS else x

    return MomentVector(
        mean=float(np.mean(x)),
        std=std,
        kurtosis=kurtosis(kurtosis_input),
        ks=ks_statistic(x, empirical),
        hurst=generalized_hurst(x, tau_min, tau_max),
    )


def target_moments(
    empirical: npt.ArrayLike,
    *,
    basis: MomentBasis = MomentBasis.LEVELS,
    tau_min: int = HURST_TAU_MIN,
    tau_max: int = HURST_TAU_MAX,
) -> MomentVector:
    # KS against itself is zero, which is the calibration target
    return moments(empirical, empirical, basis=basis, tau_min=tau_min, tau_max=tau_max)
