import csv
from datetime import time
from typing import Iterable, Optional, Sequence, TextIO

from pydantic import ValidationError

from src.core.constants import SESSION_END, SESSION_START, TICK_CSV_HEADER
from src.core.exceptions import OutOfOrderError, ParseError
from src.core.utils.formatters import format_cell
from src.core.utils.time import local_datetime
from src.models import TickRecord


def _optional_float(value: str) -> Optional[float]:
    return float(value) if value else None


def _optional_int(value: str) -> Optional[int]:
    return int(value) if value else None


def _validation_reason(exception: ValidationError) -> str:
    error = exception.errors()[0]
    message: str = error["msg"]
    return message.removeprefix("Value error, ")


def parse_ticks(stream: Iterable[str]) -> list[TickRecord]:
    """Parse a tick CSV; line numbers in errors are 1-based and count the header."""
    reader = csv.reader(stream)
    header = next(reader, None)

    if header is None:
        return []
    if tuple(column.strip() for column in header) != TICK_CSV_HEADER:
        raise ParseError(1, f"expected header '{','.join(TICK_CSV_HEADER)}'")

    records: list[TickRecord] = []
    previous: Optional[int] = None

    for line, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(TICK_CSV_HEADER):
            raise ParseError(line, f"expected '{len(TICK_CSV_HEADER)}' columns, got '{len(row)}'")

        timestamp, kind, price, volume, bid, ask = (cell.strip() for cell in row)

        try:
            record = TickRecord(
                timestamp=int(timestamp),
                kind=kind,
                price=_optional_float(price),
                volume=_optional_int(volume),
                bid=_optional_float(bid),
                ask=_optional_float(ask),
            )
        except ValidationError as exception:
            raise ParseError(line, _validation_reason(exception)) from exception
        except ValueError as exception:
            raise ParseError(line, str(exception)) from exception

        if previous is not None and record.timestamp < previous:
            raise OutOfOrderError(line, record.timestamp, previous)

        previous = record.timestamp
        records.append(record)

    return records


def serialize_ticks(records: Iterable[TickRecord], stream: TextIO) -> int:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TICK_CSV_HEADER)
    count = 0

    for record in records:
        optional = (record.price, record.volume, record.bid, record.ask)
        writer.writerow(
            [
                record.timestamp,
                record.kind.value,
                *("" if value is None else format_cell(value) for value in optional),
            ]
        )
        count += 1

    return count


def in_session(timestamp: int, start: time = SESSION_START, end: time = SESSION_END) -> bool:
    clock = local_datetime(timestamp).time()
    return start <= clock < end


def session_filter(
    ticks: Sequence[TickRecord],
    start: time = SESSION_START,
    end: time = SESSION_END,
) -> list[TickRecord]:
    return [tick for tick in ticks if in_session(tick.timestamp, start, end)]
