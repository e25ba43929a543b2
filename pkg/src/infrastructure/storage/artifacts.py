import csv
from pathlib import Path
from typing import Any, Iterable, Sequence

from loguru import logger

from src.__version__ import __version__
from src.analysis import MOMENT_NAMES
from src.core.config import AppConfig
from src.core.constants import (
    ACF_CSV_HEADER,
    CI_CSV_HEADER,
    COMPARISON_CSV_HEADER,
    EVALUATION_CSV_TAIL,
    MANIFEST_FILENAME,
    MOMENTS_CSV_HEADER,
    SIGNS_CSV_HEADER,
    SIMULATION_CSV_HEADER,
    SNAPSHOT_CSV_HEADER,
    SURFACE_CSV_HEADER,
    SWEEP_CSV_HEADER,
)
from src.core.utils import json_utils
from src.core.utils.formatters import format_cell
from src.core.utils.time import datetime_now
from src.data import serialize_ticks, write_bars
from src.models import (
    AcfReport,
    BarSeries,
    EvaluationRecord,
    MomentComparison,
    MomentVector,
    ParameterInterval,
    RunManifest,
    SimulationOutput,
    SurfaceTable,
    TickRecord,
)

Row = Sequence[Any]


class ArtifactRepository:
    """UTF-8, LF-terminated CSV and JSON writer; remembers paths for the manifest."""

    config: AppConfig

    def __init__(self, config: AppConfig) -> None:
        self.config = config
        self.output_dir = config.output_dir
        self._written: list[Path] = []

    @property
    def written(self) -> list[Path]:
        return list(self._written)

    def resolve(self, name: str | Path) -> Path:
        path = Path(name)
        if not path.is_absolute():
            path = self.output_dir / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def write_csv(self, name: str | Path, header: Row, rows: Iterable[Row]) -> Path:
        path = self.resolve(name)

        with path.open("w", encoding="utf-8", newline="") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(header)
            writer.writerows([format_cell(cell) for cell in row] for row in rows)

        return self._track(path)

    def write_json(self, name: str | Path, document: Any) -> Path:
        path = self.resolve(name)
        path.write_text(json_utils.encode(document) + "\n", encoding="utf-8")
        return self._track(path)

    def read_json(self, name: str | Path) -> dict[str, Any]:
        data: dict[str, Any] = json_utils.decode(self.resolve(name).read_bytes())
        return data

    #

    def write_bars(self, name: str | Path, bars: BarSeries) -> Path:
        path = self.resolve(name)
        with path.open("w", encoding="utf-8", newline="") as file:
            write_bars(bars, file)
        return self._track(path)

    def write_ticks(self, name: str | Path, ticks: Iterable[TickRecord]) -> Path:
        path = self.resolve(name)
        with path.open("w", encoding="utf-8", newline="") as file:
            serialize_ticks(ticks, file)
        return self._track(path)

    def write_simulation(self, name: str | Path, output: SimulationOutput) -> Path:
        diagnostics = output.diagnostics
        rows = (
            (
                step + 1,
                float(output.log_prices[step]),
                float(diagnostics.q_taker[step]),
                float(diagnostics.lambda_t[step]),
                int(diagnostics.bid_depth[step]),
                int(diagnostics.ask_depth[step]),
                int(diagnostics.trades[step]),
            )
            for step in range(output.steps)
        )
        return self.write_csv(name, SIMULATION_CSV_HEADER, rows)

    def write_signs(self, name: str | Path, signs: Sequence[int]) -> Path:
        return self.write_csv(
            name,
            SIGNS_CSV_HEADER,
            ((index, int(sign)) for index, sign in enumerate(signs)),
        )

    def write_snapshots(self, name: str | Path, rows: Iterable[Row]) -> Path:
        return self.write_csv(name, SNAPSHOT_CSV_HEADER, rows)

    def write_acf(self, name: str | Path, report: AcfReport) -> Path:
        rows = (
            (int(lag), float(value), report.noise_band)
            for lag, value in zip(report.lags, report.values)
        )
        return self.write_csv(name, ACF_CSV_HEADER, rows)

    def write_moments(self, name: str | Path, vectors: Iterable[MomentVector]) -> Path:
        rows = ((v.mean, v.std, v.kurtosis, v.ks, v.hurst) for v in vectors)
        return self.write_csv(name, MOMENTS_CSV_HEADER, rows)

    def write_intervals(self, name: str | Path, intervals: Iterable[ParameterInterval]) -> Path:
        rows = (
            (item.parameter.value, item.interval.lower, item.interval.upper, item.interval.std_err)
            for item in intervals
        )
        return self.write_csv(name, CI_CSV_HEADER, rows)

    def write_surface(self, name: str | Path, table: SurfaceTable) -> Path:
        rows = ((row.x, row.y, row.objective, row.penalized) for row in table.rows)
        return self.write_csv(name, SURFACE_CSV_HEADER, rows)

    def write_comparison(self, name: str | Path, comparison: Iterable[MomentComparison]) -> Path:
        rows = (
            (
                item.name,
                item.simulated.lower,
                item.simulated.upper,
                item.simulated.mean,
                item.simulated.std_err,
                item.empirical,
            )
            for item in comparison
        )
        return self.write_csv(name, COMPARISON_CSV_HEADER, rows)

    def write_sweep(self, name: str | Path, sweep: Iterable[tuple[float, AcfReport]]) -> Path:
        rows = (
            (delta_s, int(lag), float(value), report.noise_band)
            for delta_s, report in sweep
            for lag, value in zip(report.lags, report.values)
        )
        return self.write_csv(name, SWEEP_CSV_HEADER, rows)

    def write_evaluations(
        self,
        name: str | Path,
        parameters: Sequence[str],
        records: Sequence[EvaluationRecord],
        replications: int,
    ) -> Path:
        moment_columns = [
            f"rep{rep}_{moment}" for rep in range(replications) for moment in MOMENT_NAMES
        ]
        header = [*parameters, *EVALUATION_CSV_TAIL, *moment_columns]

        def row(record: EvaluationRecord) -> list[Any]:
            values = [record.params[name] for name in parameters]
            flat = [float(v) for m in record.result.moments for v in m.as_array()]
            padding = [""] * (len(moment_columns) - len(flat))
            return [*values, record.result.value, record.result.penalized, *flat, *padding]

        return self.write_csv(name, header, (row(record) for record in records))

    #

    def append_manifest(self, command: str, seeds: Sequence[int], started_at: str) -> Path:
        manifest = RunManifest(
            command=command,
            config=self.config.snapshot(),
            seeds=list(seeds),
            version=__version__,
            started_at=started_at,
            finished_at=datetime_now().isoformat(),
            outputs=[str(path) for path in self._written],
        )
        path = self.resolve(MANIFEST_FILENAME)

        with path.open("a", encoding="utf-8", newline="\n") as file:
            file.write(json_utils.encode(manifest) + "\n")

        logger.info(f"Recorded manifest for '{command}' with '{len(self._written)}' outputs")
        self._written.clear()
        return path

    def _track(self, path: Path) -> Path:
        logger.debug(f"Wrote '{path}'")
        self._written.append(path)
        return path
