import msgspec
import numpy as np

from src.core.utils.types import FloatArray, IntArray


class MomentVector(msgspec.Struct, frozen=True):
    mean: float
    std: float
    kurtosis: float
    ks: float
    hurst: float

    def as_array(self) -> FloatArray:
        return np.array([self.mean, self.std, self.kurtosis, self.ks, self.hurst])

    @classmethod
    def from_array(cls, values: FloatArray) -> "MomentVector":
        mean, std, kurtosis, ks, hurst = (float(v) for v in values)
        return cls(mean=mean, std=std, kurtosis=kurtosis, ks=ks, hurst=hurst)


class ConfidenceInterval(msgspec.Struct, frozen=True):
    lower: float
    upper: float
    mean: float
    std_err: float
    n: int

    @property
    def half_width(self) -> float:
        return (self.upper - self.lower) / 2

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


class AcfReport(msgspec.Struct, frozen=True):
    lags: IntArray
    values: FloatArray
    noise_band: float
    observations: int

    def above_band(self, first: int, last: int) -> bool:
        window = self.values[first - 1 : last]
        return bool(np.all(window > self.noise_band))

    def inside_band_fraction(self, first: int) -> float:
        window = self.values[first - 1 :]
        if window.size == 0:
            return 1.0
        return float(np.mean(np.abs(window) <= self.noise_band))


class SignClassification(msgspec.Struct, frozen=True):
    signs: IntArray
    unclassified: int
    by_quote: int
    by_tick: int
