import math
from datetime import date
from typing import Final

import numpy as np
from loguru import logger

from src.core.enums import Side, SyntheticGenerator, TickKind
from src.core.utils.time import business_days, local_timestamp, minutes_between
from src.engine import LimitOrderBook, PreisSimulation
from src.models import RunConfig, SyntheticSpec, TickRecord

MINUTE_MS: Final[int] = 60_000
# Last quote of a model minute, after the step's cancellations
CLOSING_QUOTE_MS: Final[int] = 59_000
AUCTION_GAP_MS: Final[int] = 5 * MINUTE_MS


def _price(ticks: float, tick_size: float) -> float:
    return round(ticks * tick_size, 10)


def _quote(timestamp: int, bid: float, ask: float, kind: TickKind = TickKind.QUOTE) -> TickRecord:
    return TickRecord(timestamp=timestamp, kind=kind, bid=bid, ask=ask)


def _trade(timestamp: int, price: float, volume: int = 1) -> TickRecord:
    return TickRecord(timestamp=timestamp, kind=TickKind.TRADE, price=price, volume=volume)


def _with_auctions(day: date, spec: SyntheticSpec, session: list[TickRecord]) -> list[TickRecord]:
    """Frame a session with out-of-window ticks: an opening auction and an early quote
    before the window, and a closing auction after it."""
    quotes = [tick for tick in session if tick.is_quote]
    if not spec.include_auctions or not quotes:
        return session

    first, last = quotes[0], quotes[-1]
    session_ms = minutes_between(spec.session_start, spec.session_end) * MINUTE_MS

    def at(offset_ms: int) -> int:
        return local_timestamp(day, spec.session_start, offset_ms)

    opening = [
        # Auction quotes may be crossed
        _quote(at(-AUCTION_GAP_MS), first.ask or 0.0, first.bid or 0.0, TickKind.AUCTION_QUOTE),
        _quote(at(-AUCTION_GAP_MS + 1), first.bid or 0.0, first.ask or 0.0),
    ]
    closing = [
        _quote(
            at(session_ms + AUCTION_GAP_MS),
            last.bid or 0.0,
            last.ask or 0.0,
            TickKind.AUCTION_QUOTE,
        ),
    ]
    return opening + session + closing


def synthesize_walk(spec: SyntheticSpec, rng: np.random.Generator) -> list[TickRecord]:
    session_minutes = minutes_between(spec.session_start, spec.session_end)
    slot_ms = MINUTE_MS // spec.quotes_per_minute
    tick = spec.tick_size

    mid_ticks = spec.initial_price / tick
    sign = 1 if rng.random() < 0.5 else -1
    records: list[TickRecord] = []

    for day in business_days(spec.start_date, spec.sessions):
        session: list[TickRecord] = []

        for minute in range(session_minutes):
            for slot in range(spec.quotes_per_minute):
                mid_ticks *= math.exp(spec.volatility * rng.standard_normal())
                spread = int(rng.integers(1, spec.max_spread_ticks + 1))
                bid_ticks = max(1, math.floor(mid_ticks - spread / 2))
                bid, ask = _price(bid_ticks, tick), _price(bid_ticks + spread, tick)

                quote_at = minute * MINUTE_MS + slot * slot_ms + int(rng.integers(0, slot_ms // 2))
                session.append(_quote(local_timestamp(day, spec.session_start, quote_at), bid, ask))

                if rng.random() >= spec.trade_probability:
                    continue

                if rng.random() >= spec.sign_persistence:
                    sign = 1 if rng.random() < 0.5 else -1

                trade_at = quote_at + 1 + int(rng.integers(0, slot_ms // 2 - 1))
                session.append(
                    _trade(
                        local_timestamp(day, spec.session_start, trade_at),
                        ask if sign > 0 else bid,
                        int(rng.integers(1, 1000)),
                    )
                )

        records.extend(_with_auctions(day, spec, session))

    return records


def synthesize_model(spec: SyntheticSpec) -> list[TickRecord]:
    """Emit the model's book as ticks, one Monte Carlo step per session minute.

    Before every market order the prevailing best quotes are written, followed one
    millisecond later by the trade at the touched quote; a closing quote ends each
    minute so its bar equals the simulated mid.
    """
    session_minutes = minutes_between(spec.session_start, spec.session_end)
    tick = spec.tick_size

    run = RunConfig(
        steps=session_minutes * spec.sessions,
        p0=max(1, round(spec.initial_price / tick)),
        seed=spec.seed,
        tick_size=tick,
    )
    simulation = PreisSimulation(spec.params, run)
    slot_ms = CLOSING_QUOTE_MS // (max(1, spec.params.taker_orders) + 1)

    records: list[TickRecord] = []

    for day in business_days(spec.start_date, spec.sessions):
        session: list[TickRecord] = []

        for minute in range(session_minutes):
            minute_start = local_timestamp(day, spec.session_start, minute * MINUTE_MS)
            submitted = 0

            def emit(book: LimitOrderBook, side: Side) -> None:
                nonlocal submitted
                submitted += 1
                quote_at = minute_start + submitted * slot_ms
                bid, ask = book.best_bid(), book.best_ask()

                if bid is not None and ask is not None:
                    session.append(_quote(quote_at, _price(bid, tick), _price(ask, tick)))

                touched = ask if side is Side.BUY else bid
                if touched is not None:
                    session.append(_trade(quote_at + 1, _price(touched, tick)))

            simulation.step(before_order=emit)

            bid, ask = simulation.book.best_bid(), simulation.book.best_ask()
            if bid is not None and ask is not None:
                session.append(
                    _quote(minute_start + CLOSING_QUOTE_MS, _price(bid, tick), _price(ask, tick))
                )

        records.extend(_with_auctions(day, spec, session))

    return records


def synthesize_ticks(spec: SyntheticSpec) -> list[TickRecord]:
    if spec.generator is SyntheticGenerator.MODEL:
        records = synthesize_model(spec)
    else:
        records = synthesize_walk(spec, np.random.default_rng(spec.seed))

    logger.info(
        f"Synthesized '{len(records)}' ticks over '{spec.sessions}' sessions "
        f"with generator '{spec.generator}'"
    )
    return records
