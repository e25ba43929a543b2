from datetime import date, time
from typing import Optional, Self

import msgspec
import numpy as np
from pydantic import Field, model_validator

from src.core.constants import DEFAULT_TICK_SIZE, SESSION_END, SESSION_START
from src.core.enums import SyntheticGenerator, TickKind
from src.core.utils.types import BoolArray, FloatArray, IntArray

from .base import BaseDto
from .params import ModelParams


class TickRecord(BaseDto):
    timestamp: int = Field(ge=0)
    kind: TickKind
    price: Optional[float] = None
    volume: Optional[int] = None
    bid: Optional[float] = None
    ask: Optional[float] = None

    @model_validator(mode="after")
    def validate_kind_fields(self) -> Self:
        match self.kind:
            case TickKind.TRADE:
                if self.price is None or self.price <= 0:
                    raise ValueError("trade requires a positive price")
                if self.volume is not None and self.volume < 0:
                    raise ValueError("trade volume must be non-negative")
            case TickKind.QUOTE:
                self._validate_quote()
                if self.bid >= self.ask:  # type: ignore[operator]
                    raise ValueError(f"bid '{self.bid}' must be below ask '{self.ask}'")
            case TickKind.AUCTION_QUOTE:
                # Auction quotes may be locked or crossed
                self._validate_quote()
        return self

    def _validate_quote(self) -> None:
        if self.bid is None or self.ask is None:
            raise ValueError("quote requires bid and ask")
        if self.bid <= 0 or self.ask <= 0:
            raise ValueError("quote prices must be positive")

    @property
    def is_trade(self) -> bool:
        return self.kind == TickKind.TRADE

    @property
    def is_quote(self) -> bool:
        return self.kind == TickKind.QUOTE

    @property
    def mid(self) -> Optional[float]:
        if self.bid is None or self.ask is None:
            return None
        return (self.bid + self.ask) / 2


class BarSeries(msgspec.Struct, frozen=True):
    log_prices: FloatArray
    days: list[date]
    minutes: IntArray
    day_index: IntArray
    carried: BoolArray
    session_minutes: int

    @property
    def count(self) -> int:
        return int(self.log_prices.shape[0])

    @property
    def carried_count(self) -> int:
        return int(np.count_nonzero(self.carried))

    def head(self, count: int) -> "BarSeries":
        sessions = -(-count // self.session_minutes)
        return BarSeries(
            log_prices=self.log_prices[:count],
            days=self.days[:sessions],
            minutes=self.minutes[:count],
            day_index=self.day_index[:count],
            carried=self.carried[:count],
            session_minutes=self.session_minutes,
        )


class PriceAlignment(msgspec.Struct, frozen=True):
    tick_size: float
    p0: int


class SyntheticSpec(BaseDto):
    """Parameters of the synthetic tick generator.

    ``WALK`` emits geometric-random-walk quotes with a trade after each quote with
    probability ``trade_probability``; a trade repeats the previous sign with
    probability ``sign_persistence`` and otherwise flips a fair coin. ``MODEL`` runs the
    order-book model one step per minute and emits its quotes and trades.
    """

    generator: SyntheticGenerator = SyntheticGenerator.WALK
    sessions: int = Field(default=5, ge=1)
    start_date: date = date(2013, 11, 1)
    session_start: time = SESSION_START
    session_end: time = SESSION_END
    tick_size: float = Field(default=DEFAULT_TICK_SIZE, gt=0.0)
    seed: int = Field(default=1, ge=0)
    include_auctions: bool = True

    initial_price: float = Field(default=247.0, gt=0.0)
    volatility: float = Field(default=2e-4, ge=0.0)
    max_spread_ticks: int = Field(default=3, ge=1)
    quotes_per_minute: int = Field(default=6, ge=1, le=60)
    trade_probability: float = Field(default=0.5, ge=0.0, le=1.0)
    sign_persistence: float = Field(default=0.0, ge=0.0, lt=1.0)

    params: ModelParams = Field(default_factory=ModelParams)
