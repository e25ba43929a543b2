import argparse
from pathlib import Path
from typing import Any, Final

from src.__version__ import __version__
from src.core.enums import (
    CalibrationMethod,
    ParamPreset,
    Profile,
    SignSource,
    SyntheticGenerator,
)

# CLI destination -> (config section, field); root fields use an empty section
CONFIG_FLAGS: Final[dict[str, tuple[str, str]]] = {
    "workers": ("", "workers"),
    "output_dir": ("", "output_dir"),
    "log_level": ("", "log_level"),
    "profile": ("", "profile"),
    "n_agents": ("simulation", "n_agents"),
    "delta": ("simulation", "delta"),
    "lambda0": ("simulation", "lambda0"),
    "c_lambda": ("simulation", "c_lambda"),
    "delta_s": ("simulation", "delta_s"),
    "alpha": ("simulation", "alpha"),
    "mu": ("simulation", "mu"),
    "steps": ("simulation", "steps"),
    "p0": ("simulation", "p0"),
    "seed": ("simulation", "seed"),
    "tick_size": ("simulation", "tick_size"),
    "replications": ("objective", "replications"),
    "seed_base": ("objective", "seed_base"),
    "iterations": ("search", "nm_iterations"),
    "population": ("search", "ga_population"),
    "generations": ("search", "ga_generations"),
    "points": ("search", "surface_points"),
    "search_seed": ("search", "seed"),
    "max_lag": ("statistics", "acf_max_lag"),
}


def collect_overrides(args: argparse.Namespace) -> dict[str, Any]:
    overrides: dict[str, Any] = {}

    for dest, (section, field) in CONFIG_FLAGS.items():
        value = getattr(args, dest, None)
        if value is None:
            continue
        if section:
            overrides.setdefault(section, {})[field] = value
        else:
            overrides[field] = value

    return overrides


def _add_global_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("configuration")
    group.add_argument("--config", type=Path, help="TOML configuration file")
    group.add_argument("--profile", choices=[p.value for p in Profile])
    group.add_argument("--workers", type=int, help="worker processes (env APP_WORKERS)")
    group.add_argument("--output-dir", type=Path)
    group.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])


def _add_model_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("model parameters")
    group.add_argument("--n-agents", type=int, help="agents per type (N_A)")
    group.add_argument("--delta", type=float, help="cancellation probability")
    group.add_argument("--lambda0", type=float, help="initial placement depth")
    group.add_argument("--c-lambda", type=int, help="placement depth coefficient")
    group.add_argument("--delta-s", type=float, help="q_taker increment")
    group.add_argument("--alpha", type=float, help="provider activation frequency")
    group.add_argument("--mu", type=float, help="taker activation frequency")
    group.add_argument("--steps", type=int, help="Monte Carlo steps (T)")
    group.add_argument("--p0", type=int, help="initial price in ticks")
    group.add_argument("--seed", type=int)
    group.add_argument("--tick-size", type=float, help="currency per simulated tick")


def _add_objective_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("objective")
    group.add_argument("--data", type=Path, required=True, help="bar CSV")
    group.add_argument("--replications", type=int)
    group.add_argument("--seed-base", type=int)


def _add_preset(parser: argparse.ArgumentParser, default: ParamPreset, flag: str) -> None:
    parser.add_argument(
        flag,
        dest="preset",
        choices=[p.value for p in ParamPreset],
        default=default.value,
        help=f"base parameter set, explicit model flags override it (default: {default})",
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    _add_global_options(common)

    model = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    _add_model_options(model)

    parser = argparse.ArgumentParser(
        prog="lobcal",
        description="Intraday limit order book model with simulated-moments calibration.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    # ingest
    ingest = sub.add_parser("ingest", parents=[common], help="tick CSV to one-minute bars")
    ingest.add_argument("input", type=Path)
    ingest.add_argument("--output", type=Path, default=Path("bars.csv"))

    # synthesize
    synth = sub.add_parser("synthesize", parents=[common, model], help="write a synthetic tick CSV")
    synth.add_argument("--output", type=Path, default=Path("ticks.csv"))
    synth.add_argument(
        "--generator",
        choices=[g.value for g in SyntheticGenerator],
        default=SyntheticGenerator.WALK.value,
    )
    synth.add_argument("--sessions", type=int, default=5)
    synth.add_argument("--sign-persistence", type=float, default=0.0)
    synth.add_argument("--trade-probability", type=float, default=0.5)
    synth.add_argument("--initial-price", type=float, default=247.0)
    _add_preset(synth, ParamPreset.CALIBRATED, "--params")

    # simulate
    simulate = sub.add_parser("simulate", parents=[common, model], help="run the model")
    simulate.add_argument("--ensemble", type=int, help="run N seeds and report the pooled ACF")
    simulate.add_argument("--as-bars", action="store_true", help="also write bars.csv")
    simulate.add_argument("--snapshot-every", type=int, help="dump the book every k steps")
    simulate.add_argument("--max-lag", type=int)
    _add_preset(simulate, ParamPreset.CONFIG, "--params")

    # calibrate
    calibrate = sub.add_parser("calibrate", parents=[common, model], help="NM or GA experiments")
    calibrate.add_argument(
        "--method",
        choices=[m.value.lower() for m in CalibrationMethod],
        required=True,
    )
    _add_objective_options(calibrate)
    calibrate.add_argument("--parameters", help="comma-separated free parameters")
    calibrate.add_argument("--experiments", type=int)
    calibrate.add_argument("--iterations", type=int, help="Nelder-Mead iterations")
    calibrate.add_argument("--population", type=int)
    calibrate.add_argument("--generations", type=int)
    calibrate.add_argument("--search-seed", type=int)
    _add_preset(calibrate, ParamPreset.CALIBRATED, "--base")

    # surface
    surface = sub.add_parser("surface", parents=[common, model], help="2-D Sobol objective scan")
    surface.add_argument("--pair", required=True, help="two parameters, e.g. lambda0,c_lambda")
    _add_objective_options(surface)
    surface.add_argument("--points", type=int)
    _add_preset(surface, ParamPreset.CALIBRATED, "--base")

    # acf
    acf = sub.add_parser("acf", parents=[common], help="trade-sign autocorrelation report")
    acf.add_argument(
        "--source",
        choices=[s.value for s in SignSource],
        required=True,
        help="tick CSV (Lee-Ready) or a sign dump",
    )
    acf.add_argument("path", type=Path)
    acf.add_argument("--max-lag", type=int)

    # moments
    moments = sub.add_parser("moments", parents=[common, model], help="simulated vs empirical")
    _add_objective_options(moments)
    moments.add_argument("--paths", type=int, default=20)
    _add_preset(moments, ParamPreset.CALIBRATED, "--params")

    # sweep
    sweep = sub.add_parser("sweep", parents=[common, model], help="delta_s order-flow sweep")
    sweep.add_argument("--values", default="0.001,0.005,0.01,0.03,0.05")
    sweep.add_argument("--ensemble", type=int, default=50)
    sweep.add_argument("--max-lag", type=int)
    _add_preset(sweep, ParamPreset.CALIBRATED, "--params")

    return parser
