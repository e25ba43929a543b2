from typing import Iterator, Optional

import numpy as np
from sortedcontainers import SortedDict

from src.core.constants import MIN_TICK_PRICE
from src.core.enums import Side, TradeSign
from src.core.exceptions import CrossedBookError, InvalidPriceError
from src.models import Trade

# A price level is an insertion-ordered dict used as a FIFO queue of order ids
PriceLevel = dict[int, None]


class LimitOrderBook:
    """Unit-size limit orders on integer tick prices.

    Each side maps price to a FIFO level; ``_orders`` keeps every resting id in
    ascending order so cancellation sweeps are reproducible for a seeded run.
    """

    def __init__(self) -> None:
        self._bids: SortedDict = SortedDict()
        self._asks: SortedDict = SortedDict()
        self._orders: dict[int, tuple[Side, int]] = {}
        self._next_id = 1

    def __len__(self) -> int:
        return len(self._orders)

    def __contains__(self, order_id: int) -> bool:
        return order_id in self._orders

    @property
    def next_id(self) -> int:
        return self._next_id

    def best_bid(self) -> Optional[int]:
        if not self._bids:
            return None
        price: int = self._bids.peekitem(-1)[0]
        return price

    def best_ask(self) -> Optional[int]:
        if not self._asks:
            return None
        price: int = self._asks.peekitem(0)[0]
        return price

    def mid_price(self) -> Optional[float]:
        bid, ask = self.best_bid(), self.best_ask()
        if bid is None or ask is None:
            return None
        return (bid + ask) / 2

    def depth(self, side: Side) -> int:
        levels = self._bids if side is Side.BUY else self._asks
        return sum(len(level) for level in levels.values())

    def order_ids(self) -> Iterator[int]:
        return iter(self._orders)

    #

    def insert_limit(self, side: Side, price: int) -> int:
        if price < MIN_TICK_PRICE:
            raise InvalidPriceError(f"Limit price '{price}' is below one tick")

        if side is Side.BUY:
            ask = self.best_ask()
            if ask is not None and price >= ask:
                raise CrossedBookError(f"Buy at '{price}' would cross best ask '{ask}'")
            levels = self._bids
        else:
            bid = self.best_bid()
            if bid is not None and price <= bid:
                raise CrossedBookError(f"Sell at '{price}' would cross best bid '{bid}'")
            levels = self._asks

        order_id = self._next_id
        self._next_id += 1

        level: Optional[PriceLevel] = levels.get(price)
        if level is None:
            level = {}
            levels[price] = level

        level[order_id] = None
        self._orders[order_id] = (side, price)
        return order_id

    def execute_market(self, side: Side) -> Optional[Trade]:
        if side is Side.BUY:
            if not self._asks:
                return None
            price, level = self._asks.peekitem(0)
            sign = TradeSign.BUYER
        else:
            if not self._bids:
                return None
            price, level = self._bids.peekitem(-1)
            sign = TradeSign.SELLER

        order_id = next(iter(level))
        self._remove(order_id)
        return Trade(price=price, sign=int(sign))

    def cancel(self, order_id: int) -> bool:
        if order_id not in self._orders:
            return False
        self._remove(order_id)
        return True

    def cancel_sweep(self, delta: float, rng: np.random.Generator) -> int:
        if not 0.0 <= delta <= 1.0:
            raise ValueError(f"Cancellation probability '{delta}' is outside [0, 1]")

        if not self._orders:
            return 0

        order_ids = list(self._orders)
        cancelled = rng.random(len(order_ids)) < delta

        for order_id, is_cancelled in zip(order_ids, cancelled):
            if is_cancelled:
                self._remove(order_id)

        return int(np.count_nonzero(cancelled))

    def snapshot(self) -> list[tuple[Side, int, int]]:
        bids = [(Side.BUY, price, len(level)) for price, level in reversed(self._bids.items())]
        asks = [(Side.SELL, price, len(level)) for price, level in self._asks.items()]
        return bids + asks

    #

    def _remove(self, order_id: int) -> None:
        side, price = self._orders.pop(order_id)
        levels = self._bids if side is Side.BUY else self._asks
        level: PriceLevel = levels[price]
        del level[order_id]
        if not level:
            del levels[price]
