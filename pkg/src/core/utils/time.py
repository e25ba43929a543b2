from datetime import date, datetime, time, timedelta, timezone

from src.core.constants import DATE_FORMAT

TIMEZONE = timezone.utc


def datetime_now() -> datetime:
    return datetime.now(tz=TIMEZONE)


# Tick timestamps are exchange-local wall clock stored as epoch milliseconds
def local_datetime(timestamp_ms: int) -> datetime:
    return datetime.fromtimestamp(timestamp_ms / 1000, tz=TIMEZONE)


def local_timestamp(day: date, at: time, offset_ms: int = 0) -> int:
    moment = datetime.combine(day, at, tzinfo=TIMEZONE) + timedelta(milliseconds=offset_ms)
    return int(moment.timestamp() * 1000)


def parse_day(value: str) -> date:
    return datetime.strptime(value, DATE_FORMAT).replace(tzinfo=TIMEZONE).date()


def minutes_between(start: time, end: time) -> int:
    return (end.hour * 60 + end.minute) - (start.hour * 60 + start.minute)


def business_days(start: date, count: int) -> list[date]:
    days: list[date] = []
    current = start
    while len(days) < count:
        if current.weekday() < 5:
            days.append(current)
        current += timedelta(days=1)
    return days


def minute_of_day(moment: datetime) -> int:
    return moment.hour * 60 + moment.minute
