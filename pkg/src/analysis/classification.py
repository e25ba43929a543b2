import math
from typing import Optional, Sequence

import numpy as np

from src.models import SignClassification, TickRecord

PRICE_TOLERANCE = 1e-9


def classify_trade_signs(
    ticks: Sequence[TickRecord],
    quote_lag_ms: int = 0,
) -> SignClassification:
    """Lee-Ready classification of trades in a chronological tick stream.

    The prevailing quote is the last regular quote strictly before the trade time
    shifted back by ``quote_lag_ms``. Trades at the mid, or with no quote yet, fall
    back to the tick test. Trades the tick test cannot sign are dropped.
    """
    quotes = [tick for tick in ticks if tick.is_quote]
    quote_times = np.array([quote.timestamp for quote in quotes], dtype=np.int64)
    quote_mids = np.array([quote.mid for quote in quotes], dtype=np.float64)

    signs: list[int] = []
    unclassified = by_quote = by_tick = 0
    previous_price: Optional[float] = None
    tick_direction = 0

    for tick in ticks:
        if not tick.is_trade or tick.price is None:
            continue

        price = tick.price
        if previous_price is not None and not math.isclose(
            price, previous_price, abs_tol=PRICE_TOLERANCE
        ):
            tick_direction = 1 if price > previous_price else -1
        previous_price = price

        index = int(np.searchsorted(quote_times, tick.timestamp - quote_lag_ms, side="left")) - 1

        if index >= 0:
            mid = float(quote_mids[index])
            if not math.isclose(price, mid, abs_tol=PRICE_TOLERANCE):
                signs.append(1 if price > mid else -1)
                by_quote += 1
                continue

        if tick_direction == 0:
            unclassified += 1
            continue

        signs.append(tick_direction)
        by_tick += 1

    return SignClassification(
        signs=np.asarray(signs, dtype=np.int64),
        unclassified=unclassified,
        by_quote=by_quote,
        by_tick=by_tick,
    )
