from datetime import time
from pathlib import Path
from typing import Final

BASE_DIR: Final[Path] = Path(__file__).resolve().parents[2]
OUTPUT_DIR: Final[Path] = BASE_DIR / "output"
LOG_DIRNAME: Final[str] = "logs"
MANIFEST_FILENAME: Final[str] = "manifests.jsonl"

# Model
INIT_STEPS: Final[int] = 10
Q_TAKER_MEAN: Final[float] = 0.5
Q_VAR_STEPS: Final[int] = 100_000
MIN_TICK_PRICE: Final[int] = 1
LAMBDA0_FLOOR: Final[float] = 1e-3

# Statistics
MIN_MOMENT_LENGTH: Final[int] = 30
MIN_HURST_LENGTH: Final[int] = 100
HURST_TAU_MIN: Final[int] = 1
HURST_TAU_MAX: Final[int] = 19
NOISE_BAND_Z: Final[float] = 1.96
ACF_MAX_LAG: Final[int] = 100
CONFIDENCE_LEVEL: Final[float] = 0.95

# Objective
MOMENT_COUNT: Final[int] = 5
PENALTY_SCALE: Final[float] = 1e6
BOOTSTRAP_BLOCK_LENGTH: Final[int] = 100
BOOTSTRAP_RESAMPLES: Final[int] = 2000
BOOTSTRAP_MIN_BLOCKS: Final[int] = 10
WEIGHT_RIDGE: Final[float] = 1e-6

# Search
NM_REFLECTION: Final[float] = 1.0
NM_EXPANSION: Final[float] = 2.0
NM_CONTRACTION: Final[float] = 0.5
NM_SHRINK: Final[float] = 0.5
THRESHOLD_FRACTION: Final[float] = 0.1
THRESHOLD_FINAL_RATIO: Final[float] = 1e-3
GA_TOURNAMENT_SIZE: Final[int] = 3
GA_CROSSOVER_RATE: Final[float] = 0.9
GA_MUTATION_RATE: Final[float] = 0.1
GA_MUTATION_SCALE: Final[float] = 0.1
GA_ELITES: Final[int] = 1

# Data
SESSION_START: Final[time] = time(9, 10)
SESSION_END: Final[time] = time(16, 50)
SESSION_MINUTES: Final[int] = 460
DEFAULT_TICK_SIZE: Final[float] = 0.01
TICK_CSV_HEADER: Final[tuple[str, ...]] = ("timestamp", "kind", "price", "volume", "bid", "ask")
BAR_CSV_HEADER: Final[tuple[str, ...]] = ("day", "minute", "log_price", "carried_forward")
DATE_FORMAT: Final[str] = "%Y-%m-%d"
SYNTHETIC_START_DATE: Final[str] = "2013-11-01"

# CSV layouts
SIMULATION_CSV_HEADER: Final[tuple[str, ...]] = (
    "step",
    "log_price",
    "q_taker",
    "lambda_t",
    "bid_depth",
    "ask_depth",
    "trades",
)
SIGNS_CSV_HEADER: Final[tuple[str, ...]] = ("index", "sign")
SNAPSHOT_CSV_HEADER: Final[tuple[str, ...]] = ("step", "side", "price", "count")
ACF_CSV_HEADER: Final[tuple[str, ...]] = ("lag", "acf", "noise_band")
MOMENTS_CSV_HEADER: Final[tuple[str, ...]] = ("m1", "m2", "m3", "m_ks", "m4")
CI_CSV_HEADER: Final[tuple[str, ...]] = ("parameter", "lower", "upper", "std_err")
SURFACE_CSV_HEADER: Final[tuple[str, ...]] = ("x", "y", "objective", "penalized")
COMPARISON_CSV_HEADER: Final[tuple[str, ...]] = (
    "moment",
    "lower",
    "upper",
    "mean",
    "std_err",
    "empirical",
)
SWEEP_CSV_HEADER: Final[tuple[str, ...]] = ("delta_s", "lag", "acf", "noise_band")
EVALUATION_CSV_TAIL: Final[tuple[str, ...]] = ("objective", "penalized")
