import math
from typing import NamedTuple, Optional

import numpy as np

from src.core.constants import MIN_TICK_PRICE, Q_TAKER_MEAN
from src.core.enums import PlacementMode, Side
from src.core.exceptions import DegenerateVarianceError, MissingReferenceError
from src.core.utils.types import IntArray
from src.models import ModelParams

from .book import LimitOrderBook
from .random import open_uniform, open_uniforms


class ProviderOutcome(NamedTuple):
    placed: int
    skipped: int


class FixedReference(NamedTuple):
    ask: int
    bid: int


def placement_depth(lambda0: float, c_lambda: float, q_taker: float, q_var: float) -> float:
    if q_var <= 0:
        raise DegenerateVarianceError("Placement depth is undefined for a zero q_taker variance")

    deviation = abs(q_taker - Q_TAKER_MEAN)
    return lambda0 * (1.0 + deviation / math.sqrt(q_var) * c_lambda)


def draw_eta(lambda_t: float, rng: np.random.Generator) -> int:
    return math.floor(-lambda_t * math.log(open_uniform(rng)))


def draw_etas(lambda_t: float, rng: np.random.Generator, size: int) -> IntArray:
    return np.floor(-lambda_t * np.log(open_uniforms(rng, size))).astype(np.int64)


def activity_count(
    n_agents: int,
    rate: float,
    fixed: int,
    mode: PlacementMode,
    rng: np.random.Generator,
) -> int:
    if mode is PlacementMode.BERNOULLI:
        return int(rng.binomial(n_agents, rate))
    return fixed


def limit_price(side: Side, reference: int, eta: int) -> int:
    if side is Side.BUY:
        return max(MIN_TICK_PRICE, reference - 1 - eta)
    return max(MIN_TICK_PRICE, reference + 1 + eta)


def place_provider_orders(
    book: LimitOrderBook,
    params: ModelParams,
    lambda_t: float,
    rng: np.random.Generator,
    *,
    mode: PlacementMode = PlacementMode.FIXED,
    reference: Optional[FixedReference] = None,
    fallback: Optional[int] = None,
) -> ProviderOutcome:
    """Submit one step of liquidity-provider limit orders.

    Buys are priced off the best ask and sells off the best bid, re-read before
    every placement. ``reference`` pins both quotes (initialization);
    ``fallback`` substitutes a price for an empty side instead of skipping.
    """
    count = activity_count(params.n_agents, params.alpha, params.provider_orders, mode, rng)
    is_buy = rng.random(count) < 0.5
    etas = draw_etas(lambda_t, rng, count)

    placed = 0
    skipped = 0

    for buy, eta in zip(is_buy.tolist(), etas.tolist()):
        side = Side.BUY if buy else Side.SELL

        try:
            anchor = _reference_price(book, side, reference, fallback)
        except MissingReferenceError:
            skipped += 1
            continue

        if side is Side.BUY and anchor <= MIN_TICK_PRICE:
            # The one-tick floor would lock against an ask sitting at one tick
            skipped += 1
            continue

        book.insert_limit(side, limit_price(side, anchor, eta))
        placed += 1

    return ProviderOutcome(placed=placed, skipped=skipped)


def _reference_price(
    book: LimitOrderBook,
    side: Side,
    reference: Optional[FixedReference],
    fallback: Optional[int],
) -> int:
    if reference is not None:
        return reference.ask if side is Side.BUY else reference.bid

    quote = book.best_ask() if side is Side.BUY else book.best_bid()
    if quote is not None:
        return quote
    if fallback is not None:
        return fallback

    missing = "ask" if side is Side.BUY else "bid"
    raise MissingReferenceError(f"Best {missing} is undefined")
