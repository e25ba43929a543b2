import argparse
from pathlib import Path
from typing import Callable, Final, Sequence

from dishka import Container
from loguru import logger
from pydantic import TypeAdapter, ValidationError

from src.calibration import ALL_PARAMETERS
from src.core.config import AppConfig
from src.core.config.search import ParameterList
from src.core.enums import CalibrationMethod, FreeParameter, ParamPreset, SignSource
from src.core.exceptions import ConfigurationError
from src.data import bars_from_log_prices
from src.infrastructure.storage import ArtifactRepository
from src.models import SyntheticSpec
from src.services import (
    CalibrationService,
    IngestService,
    OrderFlowService,
    SimulationService,
    SurfaceService,
)

# Each command returns the seeds its outputs depend on
Command = Callable[[Container, argparse.Namespace], list[int]]

PARAMETER_LIST: Final[TypeAdapter[list[FreeParameter]]] = TypeAdapter(ParameterList)


def parse_parameters(text: str, expected: int | None = None) -> list[FreeParameter]:
    try:
        parameters = PARAMETER_LIST.validate_python(text)
    except ValidationError as exception:
        raise ConfigurationError(f"Invalid parameter list '{text}': {exception}") from exception

    if expected is not None and len(parameters) != expected:
        raise ConfigurationError(f"Expected '{expected}' parameters, got '{text}'")

    return parameters


def parse_floats(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exception:
        raise ConfigurationError(f"Invalid number list '{text}'") from exception

    if not values:
        raise ConfigurationError("Number list must not be empty")

    return values


def require_positive(name: str, value: int | None) -> None:
    if value is not None and value < 1:
        raise ConfigurationError(f"'{name}' must be at least 1, got '{value}'")


#


def cmd_ingest(container: Container, args: argparse.Namespace) -> list[int]:
    ingest = container.get(IngestService)
    ingest.ingest(args.input, args.output)
    return []


def cmd_synthesize(container: Container, args: argparse.Namespace) -> list[int]:
    config = container.get(AppConfig)
    simulation = container.get(SimulationService)

    try:
        spec = SyntheticSpec(
            generator=args.generator,
            sessions=args.sessions,
            session_start=config.data.session_start,
            session_end=config.data.session_end,
            tick_size=config.data.tick_size,
            seed=config.simulation.seed,
            initial_price=args.initial_price,
            trade_probability=args.trade_probability,
            sign_persistence=args.sign_persistence,
            params=simulation.model_params(ParamPreset(args.preset)),
        )
    except ValidationError as exception:
        raise ConfigurationError(str(exception)) from exception

    ticks = container.get(IngestService).synthesize(spec, args.output)
    logger.info(f"Synthesized '{len(ticks)}' ticks over '{spec.sessions}' sessions")
    return [spec.seed]


def cmd_simulate(container: Container, args: argparse.Namespace) -> list[int]:
    simulation = container.get(SimulationService)
    artifacts = container.get(ArtifactRepository)
    params = simulation.model_params(ParamPreset(args.preset))
    run = simulation.run_config()

    ensemble = getattr(args, "ensemble", None)
    require_positive("ensemble", ensemble)

    if ensemble:
        report = simulation.ensemble_acf(params, run, ensemble)
        artifacts.write_acf(Path("simulation") / "ensemble_acf.csv", report)
        logger.info(
            f"Ensemble of '{ensemble}': lags 1-10 above band "
            f"'{report.above_band(1, min(10, report.lags.size))}'"
        )
        return [run.seed + i for i in range(ensemble)]

    snapshot_every = getattr(args, "snapshot_every", None)
    require_positive("snapshot-every", snapshot_every)

    output, snapshots = simulation.simulate(params, run, snapshot_every)
    directory = Path("simulation")
    simulation.write_outputs(output, snapshots, directory)

    if getattr(args, "as_bars", False):
        artifacts.write_bars(directory / "bars.csv", bars_from_log_prices(output.log_prices))

    return [run.seed]


def cmd_calibrate(container: Container, args: argparse.Namespace) -> list[int]:
    config = container.get(AppConfig)
    ingest = container.get(IngestService)
    calibration = container.get(CalibrationService)
    simulation = container.get(SimulationService)
    artifacts = container.get(ArtifactRepository)

    method = CalibrationMethod(args.method.upper())
    if args.parameters is not None:
        parameters: Sequence[FreeParameter] = parse_parameters(args.parameters)
    elif method is CalibrationMethod.NM:
        parameters = ALL_PARAMETERS
    else:
        parameters = config.search.ga_parameters

    experiments = getattr(args, "experiments", None)
    require_positive("experiments", experiments)
    if experiments is None:
        experiments = (
            config.search.nm_experiments
            if method is CalibrationMethod.NM
            else config.search.ga_experiments
        )

    spec = calibration.prepare(ingest.load_bars(args.data))
    space = calibration.space(parameters, simulation.model_params(ParamPreset(args.preset)))
    directory = Path("calibration") / method.value.lower()
    artifacts.write_json(directory / "weights.json", spec.weights)

    outcomes = calibration.calibrate(method, spec, space, experiments)
    names = [parameter.value for parameter in space.parameters]

    for outcome in outcomes:
        seed = outcome.experiment.seed
        artifacts.write_json(directory / f"experiment_{seed}.json", outcome.experiment)
        artifacts.write_evaluations(
            directory / f"evaluations_{seed}.csv",
            names,
            outcome.history,
            spec.replications,
        )

    experiment_list = [outcome.experiment for outcome in outcomes]
    intervals = calibration.intervals(experiment_list)
    if intervals:
        artifacts.write_intervals(directory / "ci.csv", intervals)

    return [experiment.seed for experiment in experiment_list]


def cmd_surface(container: Container, args: argparse.Namespace) -> list[int]:
    config = container.get(AppConfig)
    ingest = container.get(IngestService)
    calibration = container.get(CalibrationService)
    simulation = container.get(SimulationService)
    surface = container.get(SurfaceService)
    artifacts = container.get(ArtifactRepository)

    pair = parse_parameters(args.pair, expected=2)
    spec = calibration.prepare(ingest.load_bars(args.data))
    base = simulation.model_params(ParamPreset(args.preset))

    table, _ = surface.scan(pair, spec, base, config.search.surface_points)
    artifacts.write_surface(Path("surface") / f"{pair[0].value}_{pair[1].value}.csv", table)
    return [spec.seed_base + i for i in range(spec.replications)]


def cmd_acf(container: Container, args: argparse.Namespace) -> list[int]:
    order_flow = container.get(OrderFlowService)
    artifacts = container.get(ArtifactRepository)

    if SignSource(args.source) is SignSource.DATA:
        report = order_flow.acf_from_ticks(args.path)
    else:
        report = order_flow.acf_from_signs(args.path)

    artifacts.write_acf(Path("acf") / f"{args.path.stem}_acf.csv", report)
    logger.info(
        f"ACF over '{report.observations}' signs: lag-1 '{report.values[0]:.4f}', "
        f"noise band '{report.noise_band:.4f}'"
    )
    return []


def cmd_moments(container: Container, args: argparse.Namespace) -> list[int]:
    ingest = container.get(IngestService)
    calibration = container.get(CalibrationService)
    simulation = container.get(SimulationService)
    artifacts = container.get(ArtifactRepository)

    require_positive("paths", args.paths)
    if args.paths < 2:
        raise ConfigurationError("Moment intervals need at least two paths")

    spec = calibration.prepare(ingest.load_bars(args.data))
    params = simulation.model_params(ParamPreset(args.preset))
    comparison = calibration.compare_moments(params, spec, args.paths)

    artifacts.write_moments(Path("moments") / "empirical.csv", [spec.target])
    artifacts.write_comparison(Path("moments") / "comparison.csv", comparison)

    for row in comparison:
        inside = row.simulated.contains(row.empirical)
        logger.info(
            f"Moment '{row.name}': simulated [{row.simulated.lower:.4g}, "
            f"{row.simulated.upper:.4g}], empirical '{row.empirical:.4g}', inside '{inside}'"
        )

    return [spec.seed_base + i for i in range(args.paths)]


def cmd_sweep(container: Container, args: argparse.Namespace) -> list[int]:
    simulation = container.get(SimulationService)
    artifacts = container.get(ArtifactRepository)

    require_positive("ensemble", args.ensemble)
    values = parse_floats(args.values)
    params = simulation.model_params(ParamPreset(args.preset))
    run = simulation.run_config()

    sweep = simulation.sweep_delta_s(params, run, values, args.ensemble)
    artifacts.write_sweep(Path("sweep") / "delta_s.csv", sweep)
    return [run.seed + i for i in range(args.ensemble)]


COMMANDS: Final[dict[str, Command]] = {
    "ingest": cmd_ingest,
    "synthesize": cmd_synthesize,
    "simulate": cmd_simulate,
    "calibrate": cmd_calibrate,
    "surface": cmd_surface,
    "acf": cmd_acf,
    "moments": cmd_moments,
    "sweep": cmd_sweep,
}
