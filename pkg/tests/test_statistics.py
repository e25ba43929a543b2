import math

import numpy as np
import pytest

from src.analysis import (
    acf,
    acf_values,
    confidence_interval,
    ensemble_acf,
    generalized_hurst,
    ks_statistic,
    kurtosis,
    moments,
    noise_band,
    t_critical,
    target_moments,
)
from src.core.enums import MomentBasis
from src.core.exceptions import DegenerateSeriesError


def random_walk(rng: np.random.Generator, n: int) -> np.ndarray:
    return np.cumsum(rng.standard_normal(n))


def test_alternating_series_moments() -> None:
    series = np.tile([-1.0, 1.0], 500)

    assert float(np.mean(series)) == 0.0
    assert float(np.std(series, ddof=1)) == pytest.approx(1.0, abs=1e-3)
    assert kurtosis(series) == pytest.approx(1.0)


def test_moments_match_direct_summation(rng: np.random.Generator) -> None:
    for _ in range(1_000):
        x = rng.standard_normal(int(rng.integers(150, 400))) * rng.uniform(0.1, 10.0)
        n = x.size
        mean = sum(x.tolist()) / n
        m2 = sum((v - mean) ** 2 for v in x.tolist()) / n
        m4 = sum((v - mean) ** 4 for v in x.tolist()) / n

        assert kurtosis(x) == pytest.approx(m4 / m2**2, rel=1e-12)
        assert float(np.mean(x)) == pytest.approx(mean, rel=1e-12, abs=1e-12)
        assert float(np.std(x, ddof=1)) == pytest.approx(math.sqrt(m2 * n / (n - 1)), rel=1e-12)


def test_kurtosis_of_constant_series_raises() -> None:
    with pytest.raises(DegenerateSeriesError):
        kurtosis(np.full(200, 3.0))


def test_moments_of_constant_series_raise() -> None:
    series = np.full(300, 5.5)
    with pytest.raises(DegenerateSeriesError):
        moments(series, series)


def test_moment_vector_components(rng: np.random.Generator) -> None:
    series = 5.5 + 0.01 * random_walk(rng, 2_300)
    vector = target_moments(series)

    assert vector.mean == pytest.approx(float(np.mean(series)))
    assert vector.std == pytest.approx(float(np.std(series, ddof=1)))
    assert vector.ks == 0.0
    assert 0.0 < vector.hurst < 1.0


def test_returns_basis_uses_increments_for_kurtosis(rng: np.random.Generator) -> None:
    series = random_walk(rng, 500)

    vector = moments(series, series, basis=MomentBasis.RETURNS)

    assert vector.kurtosis == pytest.approx(kurtosis(np.diff(series)))


def test_ks_of_identical_samples(rng: np.random.Generator) -> None:
    sample = rng.standard_normal(500)
    assert ks_statistic(sample, sample) == 0.0


def test_ks_of_disjoint_samples() -> None:
    assert ks_statistic([1.0, 2.0, 3.0], [10.0, 11.0]) == 1.0


def test_ks_of_shifted_uniforms(rng: np.random.Generator) -> None:
    a = rng.uniform(0.0, 1.0, 100_000)
    b = rng.uniform(0.5, 1.5, 100_000)

    assert ks_statistic(a, b) == pytest.approx(0.5, abs=0.01)


def test_ks_is_symmetric_and_affine_invariant(rng: np.random.Generator) -> None:
    a, b = rng.standard_normal(300), rng.standard_normal(400) + 0.3

    assert ks_statistic(a, b) == ks_statistic(b, a)
    assert ks_statistic(a, b) == pytest.approx(ks_statistic(2.5 * a + 7, 2.5 * b + 7))


def test_ks_rejects_empty_sample() -> None:
    with pytest.raises(ValueError):
        ks_statistic([], [1.0])


def test_hurst_of_linear_trend() -> None:
    assert generalized_hurst(0.3 * np.arange(500.0)) == pytest.approx(1.0, abs=1e-6)


def test_hurst_of_random_walks(rng: np.random.Generator) -> None:
    estimates = [generalized_hurst(random_walk(rng, 10_000)) for _ in range(100)]
    assert float(np.mean(estimates)) == pytest.approx(0.5, abs=0.03)


def test_hurst_needs_enough_points() -> None:
    with pytest.raises(DegenerateSeriesError):
        generalized_hurst(np.arange(50.0))


@pytest.mark.parametrize(("scale", "shift"), [(3.0, 0.0), (0.01, 250.0), (-2.0, -7.5)])
def test_hurst_is_affine_invariant(rng: np.random.Generator, scale: float, shift: float) -> None:
    walk = random_walk(rng, 2_000)

    assert generalized_hurst(scale * walk + shift) == pytest.approx(generalized_hurst(walk))


def test_kurtosis_is_at_least_one(rng: np.random.Generator) -> None:
    samples = [
        rng.standard_normal(50),
        rng.random(20),
        rng.choice([-1.0, 1.0], size=31),
        rng.lognormal(size=200),
        rng.standard_t(3, size=100),
    ]

    assert all(kurtosis(sample) >= 1.0 - 1e-12 for sample in samples)


#


def test_acf_of_constant_signs_is_one() -> None:
    np.testing.assert_array_equal(acf_values(np.ones(500), 20), np.ones(20))


def test_acf_of_iid_signs_stays_in_band(rng: np.random.Generator) -> None:
    signs = rng.choice([-1, 1], size=100_000)
    report = acf(signs, 100)

    assert report.noise_band == pytest.approx(1.96 / math.sqrt(100_000))
    assert int(np.sum(np.abs(report.values) < report.noise_band)) >= 90


def test_acf_of_thresholded_ar1(rng: np.random.Generator) -> None:
    noise = rng.standard_normal(100_000)
    latent = np.empty_like(noise)
    latent[0] = noise[0]
    for t in range(1, noise.size):
        latent[t] = 0.5 * latent[t - 1] + noise[t]

    report = acf(np.sign(latent), 5)

    assert report.values[0] == pytest.approx(2 / math.pi * math.asin(0.5), abs=0.02)


def test_acf_is_unchanged_by_reversal(rng: np.random.Generator) -> None:
    signs = np.sign(rng.standard_normal(5_000) + 0.2)

    np.testing.assert_allclose(acf_values(signs[::-1], 30), acf_values(signs, 30), atol=1e-12)


def test_acf_requires_more_points_than_lags() -> None:
    with pytest.raises(DegenerateSeriesError):
        acf([1, -1, 1], 5)


def test_ensemble_acf_drops_short_runs(rng: np.random.Generator) -> None:
    runs = [rng.choice([-1, 1], size=1_000), rng.choice([-1, 1], size=3_000), np.ones(5)]
    report = ensemble_acf(runs, 10)

    expected = (acf_values(runs[0], 10) + acf_values(runs[1], 10)) / 2
    np.testing.assert_allclose(report.values, expected)
    assert report.observations == 2_000
    assert report.noise_band == noise_band(2_000)


def test_ensemble_acf_without_usable_runs() -> None:
    with pytest.raises(ValueError):
        ensemble_acf([np.ones(3)], 10)


#


def test_interval_of_equal_samples_has_zero_width() -> None:
    interval = confidence_interval([4.2] * 20)

    assert interval.lower == interval.upper == pytest.approx(4.2)
    assert interval.std_err == 0.0


def test_interval_of_two_samples() -> None:
    interval = confidence_interval([0.0, 2.0])

    assert interval.mean == 1.0
    assert interval.std_err == pytest.approx(1.0)
    assert interval.lower == pytest.approx(1.0 - 12.706, abs=1e-3)
    assert interval.upper == pytest.approx(1.0 + 12.706, abs=1e-3)


def test_half_width_for_twenty_experiments() -> None:
    assert t_critical(20) * 12.7892 == pytest.approx(26.77, abs=0.01)


def test_interval_needs_two_samples() -> None:
    with pytest.raises(ValueError):
        confidence_interval([1.0])
