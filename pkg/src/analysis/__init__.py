from .acf import acf, acf_values, ensemble_acf, noise_band
from .classification import classify_trade_signs
from .intervals import confidence_interval, t_critical
from .moments import (
    MOMENT_NAMES,
    generalized_hurst,
    ks_statistic,
    kurtosis,
    moments,
    target_moments,
)

__all__ = [
    "MOMENT_NAMES",
    "acf",
    "acf_values",
    "classify_trade_signs",
    "confidence_interval",
    "ensemble_acf",
    "generalized_hurst",
    "ks_statistic",
    "kurtosis",
    "moments",
    "noise_band",
    "t_critical",
]
