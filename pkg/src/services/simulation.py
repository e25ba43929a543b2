from functools import partial
from pathlib import Path
from typing import Optional, Sequence

from loguru import logger

from src.analysis import ensemble_acf
from src.core.enums import ParamPreset, Side
from src.engine import LimitOrderBook, PreisSimulation, simulate
from src.models import AcfReport, ModelParams, RunConfig, SimulationOutput

from .base import BaseService

SnapshotRow = tuple[int, str, int, int]


def simulate_seed(params: ModelParams, run: RunConfig, seed: int) -> SimulationOutput:
    return simulate(params, run.with_values(seed=seed))


def simulate_signs(params: ModelParams, run: RunConfig, seed: int) -> list[int]:
    output = simulate_seed(params, run, seed)
    return output.trade_signs.tolist()


class SimulationService(BaseService):
    def model_params(self, preset: ParamPreset = ParamPreset.CONFIG) -> ModelParams:
        """Preset values overlaid with the model fields the operator set explicitly."""
        simulation = self.config.simulation
        configured = ModelParams.from_config(simulation)

        if preset is ParamPreset.CONFIG:
            return configured

        base = ModelParams.default() if preset is ParamPreset.DEFAULT else ModelParams.calibrated()
        explicit = {
            name: getattr(configured, name)
            for name in simulation.model_fields_set
            if name in ModelParams.model_fields
        }
        return base.with_values(**explicit)

    def run_config(self) -> RunConfig:
        return RunConfig.from_config(self.config.simulation)

    def simulate(
        self,
        params: ModelParams,
        run: RunConfig,
        snapshot_every: Optional[int] = None,
    ) -> tuple[SimulationOutput, list[SnapshotRow]]:
        snapshots: list[SnapshotRow] = []

        def record(step: int, book: LimitOrderBook) -> None:
            snapshots.extend(
                (step, "bid" if side is Side.BUY else "ask", price, count)
                for side, price, count in book.snapshot()
            )

        output = PreisSimulation(params, run).run(snapshot_every, record)
        diagnostics = output.diagnostics

        logger.info(
            f"Simulated '{output.steps}' steps with seed '{run.seed}': "
            f"'{output.trade_signs.size}' trades, q_var '{output.q_var:.3e}'"
        )
        if diagnostics.depleted_steps:
            logger.warning(
                f"Book side was empty after '{diagnostics.depleted_steps}' steps, "
                f"mid carried forward"
            )
        if int(diagnostics.skipped.sum()):
            logger.warning(
                f"Skipped '{int(diagnostics.skipped.sum())}' provider orders without a reference"
            )

        return output, snapshots

    def ensemble(self, params: ModelParams, run: RunConfig, size: int) -> list[SimulationOutput]:
        seeds = [run.seed + i for i in range(size)]
        logger.info(f"Running ensemble of '{size}' simulations from seed '{run.seed}'")
        return self.pool.map(partial(simulate_seed, params, run), seeds)

    def ensemble_acf(self, params: ModelParams, run: RunConfig, size: int) -> AcfReport:
        seeds = [run.seed + i for i in range(size)]
        signs = self.pool.map(partial(simulate_signs, params, run), seeds)
        return ensemble_acf(signs, self.config.statistics.acf_max_lag)

    def sweep_delta_s(
        self,
        base: ModelParams,
        run: RunConfig,
        values: Sequence[float],
        size: int,
    ) -> list[tuple[float, AcfReport]]:
        """Ensemble trade-sign ACF for each order-flow persistence increment."""
        sweep: list[tuple[float, AcfReport]] = []

        for delta_s in values:
            report = self.ensemble_acf(base.with_values(delta_s=delta_s), run, size)
            significant = report.above_band(1, min(10, report.lags.size))
            logger.info(
                f"delta_s '{delta_s}': lag-1 ACF '{report.values[0]:.4f}', "
                f"band '{report.noise_band:.4f}', low lags significant '{significant}'"
            )
            sweep.append((delta_s, report))

        return sweep

    def write_outputs(
        self,
        output: SimulationOutput,
        snapshots: list[SnapshotRow],
        directory: Path,
    ) -> None:
        self.artifacts.write_simulation(directory / "simulation.csv", output)
        self.artifacts.write_signs(directory / "signs.csv", output.trade_signs.tolist())
        if snapshots:
            self.artifacts.write_snapshots(directory / "snapshots.csv", snapshots)
