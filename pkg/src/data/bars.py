import csv
import math
from datetime import date, time
from itertools import groupby
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np
import numpy.typing as npt
from loguru import logger

from src.core.constants import (
    BAR_CSV_HEADER,
    DEFAULT_TICK_SIZE,
    MIN_TICK_PRICE,
    SESSION_END,
    SESSION_START,
    SYNTHETIC_START_DATE,
)
from src.core.exceptions import DataError, EmptySessionError, ParseError
from src.core.utils.formatters import format_cell
from src.core.utils.time import (
    business_days,
    local_datetime,
    minute_of_day,
    minutes_between,
    parse_day,
)
from src.models import BarSeries, PriceAlignment, TickRecord


def bars_1min(
    ticks: Sequence[TickRecord],
    start: time = SESSION_START,
    end: time = SESSION_END,
) -> BarSeries:
    """One log-price bar per session minute from the last regular quote mid.

    Quiet minutes repeat the previous bar (across days) and are flagged; leading quiet
    minutes of the first day take the first observed bar.
    """
    session_minutes = minutes_between(start, end)
    first_minute = start.hour * 60 + start.minute

    days: list[date] = []
    mids: list[npt.NDArray[np.float64]] = []

    for day, day_ticks in groupby(ticks, key=lambda tick: local_datetime(tick.timestamp).date()):
        minute_mids = np.full(session_minutes, np.nan)
        quotes = 0

        for tick in day_ticks:
            if not tick.is_quote or tick.mid is None:
                continue
            offset = minute_of_day(local_datetime(tick.timestamp)) - first_minute
            if 0 <= offset < session_minutes:
                minute_mids[offset] = tick.mid
                quotes += 1

        if quotes == 0:
            raise EmptySessionError(day.isoformat())

        days.append(day)
        mids.append(minute_mids)

    if not days:
        return bars_from_log_prices(np.empty(0), [], session_minutes)

    values = np.concatenate(mids)
    carried = np.isnan(values)

    observed = np.flatnonzero(~carried)
    filled = np.maximum.accumulate(np.where(carried, 0, np.arange(values.size)))
    filled[: observed[0]] = observed[0]
    values = values[filled]

    if carried.any():
        logger.warning(f"Carried forward '{int(carried.sum())}' quiet minute bars")

    return BarSeries(
        log_prices=np.log(values),
        days=days,
        minutes=np.tile(np.arange(session_minutes), len(days)),
        day_index=np.repeat(np.arange(len(days)), session_minutes),
        carried=carried,
        session_minutes=session_minutes,
    )


def bars_from_log_prices(
    log_prices: npt.ArrayLike,
    days: Optional[Sequence[date]] = None,
    session_minutes: Optional[int] = None,
) -> BarSeries:
    """Lay a log-price series out on consecutive business-day sessions."""
    values = np.asarray(log_prices, dtype=np.float64)
    session_minutes = session_minutes or minutes_between(SESSION_START, SESSION_END)
    sessions = math.ceil(values.size / session_minutes)

    if days is None:
        days = business_days(parse_day(SYNTHETIC_START_DATE), sessions)

    positions = np.arange(values.size)
    return BarSeries(
        log_prices=values,
        days=list(days),
        minutes=positions % session_minutes,
        day_index=positions // session_minutes,
        carried=np.zeros(values.size, dtype=np.bool_),
        session_minutes=session_minutes,
    )


def align_scale(bars: BarSeries, tick_size: float = DEFAULT_TICK_SIZE) -> PriceAlignment:
    if bars.count == 0:
        raise DataError("Cannot align an empty bar series")

    p0 = round(math.exp(float(bars.log_prices[0])) / tick_size)
    if p0 < MIN_TICK_PRICE:
        raise DataError(f"First bar is below one tick of size '{tick_size}'")

    return PriceAlignment(tick_size=tick_size, p0=p0)


def write_bars(bars: BarSeries, stream: TextIO) -> int:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BAR_CSV_HEADER)

    for i in range(bars.count):
        writer.writerow(
            [
                bars.days[int(bars.day_index[i])].isoformat(),
                int(bars.minutes[i]),
                format_cell(float(bars.log_prices[i])),
                format_cell(bool(bars.carried[i])),
            ]
        )

    return bars.count


def read_bars(stream: Iterable[str]) -> BarSeries:
    reader = csv.reader(stream)
    header = next(reader, None)

    if header is None or tuple(header) != BAR_CSV_HEADER:
        raise ParseError(1, f"expected header '{','.join(BAR_CSV_HEADER)}'")

    days: list[date] = []
    log_prices: list[float] = []
    minutes: list[int] = []
    day_index: list[int] = []
    carried: list[bool] = []

    for line, row in enumerate(reader, start=2):
        if not row:
            continue
        try:
            day_text, minute, log_price, carried_flag = row
            day = date.fromisoformat(day_text)
            if not days or days[-1] != day:
                days.append(day)
            minutes.append(int(minute))
            log_prices.append(float(log_price))
            carried.append(carried_flag == "1")
            day_index.append(len(days) - 1)
        except ValueError as exception:
            raise ParseError(line, str(exception)) from exception

    session_minutes = max(minutes) + 1 if minutes else minutes_between(SESSION_START, SESSION_END)

    return BarSeries(
        log_prices=np.asarray(log_prices, dtype=np.float64),
        days=days,
        minutes=np.asarray(minutes, dtype=np.int64),
        day_index=np.asarray(day_index, dtype=np.int64),
        carried=np.asarray(carried, dtype=np.bool_),
        session_minutes=session_minutes,
    )
