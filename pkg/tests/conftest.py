from pathlib import Path

import numpy as np
import pytest

from src.core.config import AppConfig
from src.models import ModelParams, RunConfig, SyntheticSpec, WeightMatrix

SMALL_STEPS = 300
SMALL_Q_VAR_STEPS = 20_000


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20131101)


@pytest.fixture
def small_run() -> RunConfig:
    return RunConfig(steps=SMALL_STEPS, p0=10_000, seed=3, q_var_steps=SMALL_Q_VAR_STEPS)


@pytest.fixture
def default_params() -> ModelParams:
    return ModelParams.default()


@pytest.fixture
def best_params() -> ModelParams:
    return ModelParams.calibrated()


@pytest.fixture
def identity_weights() -> WeightMatrix:
    return WeightMatrix(matrix=np.eye(5), ridge=0.0)


@pytest.fixture
def app_config(tmp_path: Path) -> AppConfig:
    return AppConfig.get(
        output_dir=tmp_path / "output",
        simulation={"steps": SMALL_STEPS, "q_var_steps": SMALL_Q_VAR_STEPS},
        objective={"replications": 2, "block_length": 20, "resamples": 40},
    )


@pytest.fixture
def walk_spec() -> SyntheticSpec:
    return SyntheticSpec(sessions=5, seed=11, quotes_per_minute=2)
