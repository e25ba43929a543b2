from pathlib import Path

from loguru import logger

from src.data import bars_1min, parse_ticks, read_bars, session_filter, synthesize_ticks
from src.models import BarSeries, SyntheticSpec, TickRecord

from .base import BaseService


class IngestService(BaseService):
    def load_ticks(self, path: Path) -> list[TickRecord]:
        with path.open(encoding="utf-8", newline="") as file:
            ticks = parse_ticks(file)
        logger.info(f"Parsed '{len(ticks)}' ticks from '{path}'")
        return ticks

    def build_bars(self, ticks: list[TickRecord]) -> BarSeries:
        window = self.config.data
        filtered = session_filter(ticks, window.session_start, window.session_end)
        bars = bars_1min(filtered, window.session_start, window.session_end)

        logger.info(
            f"Built '{bars.count}' bars over '{len(bars.days)}' sessions "
            f"('{bars.carried_count}' carried forward, '{len(ticks) - len(filtered)}' ticks "
            f"outside the session window)"
        )
        return bars

    def ingest(self, source: Path, target: Path) -> BarSeries:
        bars = self.build_bars(self.load_ticks(source))
        self.artifacts.write_bars(target, bars)
        return bars

    def load_bars(self, path: Path) -> BarSeries:
        with path.open(encoding="utf-8", newline="") as file:
            bars = read_bars(file)
        logger.info(f"Loaded '{bars.count}' bars from '{path}'")
        return bars

    def synthesize(self, spec: SyntheticSpec, target: Path) -> list[TickRecord]:
        ticks = synthesize_ticks(spec)
        self.artifacts.write_ticks(target, ticks)
        return ticks
