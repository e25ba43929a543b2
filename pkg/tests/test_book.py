import numpy as np
import pytest

from src.core.enums import Side, TradeSign
from src.core.exceptions import CrossedBookError, InvalidPriceError
from src.engine import LimitOrderBook, limit_price


def make_book(bids: list[int], asks: list[int]) -> LimitOrderBook:
    book = LimitOrderBook()
    for price in bids:
        book.insert_limit(Side.BUY, price)
    for price in asks:
        book.insert_limit(Side.SELL, price)
    return book


def assert_uncrossed(book: LimitOrderBook) -> None:
    bid, ask = book.best_bid(), book.best_ask()
    if bid is not None and ask is not None:
        assert bid < ask


def test_insert_into_empty_book() -> None:
    book = LimitOrderBook()
    book.insert_limit(Side.BUY, 100)

    assert book.best_bid() == 100
    assert book.best_ask() is None
    assert book.mid_price() is None


def test_insert_inside_spread_improves_ask() -> None:
    book = make_book([100], [102])
    book.insert_limit(Side.SELL, 101)

    assert book.best_ask() == 101
    assert_uncrossed(book)


def test_insert_crossing_buy_raises() -> None:
    book = make_book([100], [102])

    with pytest.raises(CrossedBookError):
        book.insert_limit(Side.BUY, 102)

    assert len(book) == 2


def test_insert_below_one_tick_raises() -> None:
    with pytest.raises(InvalidPriceError):
        LimitOrderBook().insert_limit(Side.BUY, 0)


def test_market_buy_consumes_best_ask() -> None:
    book = make_book([100], [102])
    trade = book.execute_market(Side.BUY)

    assert trade is not None
    assert (trade.price, trade.sign) == (102, TradeSign.BUYER)
    assert book.best_ask() is None


def test_market_order_against_empty_side_is_noop() -> None:
    book = make_book([100], [])

    assert book.execute_market(Side.BUY) is None
    assert book.snapshot() == [(Side.BUY, 100, 1)]


def test_market_sell_walks_to_next_bid() -> None:
    book = make_book([99, 100], [102])
    trade = book.execute_market(Side.SELL)

    assert trade is not None
    assert (trade.price, trade.sign) == (100, TradeSign.SELLER)
    assert book.best_bid() == 99


def test_price_level_is_fifo() -> None:
    book = LimitOrderBook()
    first = book.insert_limit(Side.SELL, 105)
    second = book.insert_limit(Side.SELL, 105)

    book.execute_market(Side.BUY)

    assert first not in book
    assert second in book


@pytest.mark.parametrize(
    ("bid", "ask", "mid"),
    [(100, 102, 101.0), (100, 101, 100.5)],
)
def test_mid_price(bid: int, ask: int, mid: float) -> None:
    assert make_book([bid], [ask]).mid_price() == mid


def test_cancel_sweep_extremes(rng: np.random.Generator) -> None:
    book = make_book([90, 91, 92], [95, 96])

    assert book.cancel_sweep(0.0, rng) == 0
    assert len(book) == 5
    assert book.cancel_sweep(1.0, rng) == 5
    assert len(book) == 0


def test_cancel_sweep_half(rng: np.random.Generator) -> None:
    book = make_book(list(range(1, 501)), list(range(1001, 1501)))

    cancelled = book.cancel_sweep(0.5, rng)

    assert 440 <= cancelled <= 560
    assert len(book) == 1000 - cancelled


def test_cancel_sweep_rejects_bad_probability(rng: np.random.Generator) -> None:
    with pytest.raises(ValueError):
        LimitOrderBook().cancel_sweep(1.5, rng)


def test_cancel_unknown_order() -> None:
    book = make_book([100], [])

    assert book.cancel(999) is False
    assert book.cancel(1) is True
    assert len(book) == 0


def test_random_operations_keep_book_uncrossed(rng: np.random.Generator) -> None:
    book = LimitOrderBook()
    p0 = 1_000

    for _ in range(100_000):
        operation = rng.random()

        if operation < 0.6:
            side = Side.BUY if rng.random() < 0.5 else Side.SELL
            quote = book.best_ask() if side is Side.BUY else book.best_bid()
            anchor = quote if quote is not None else p0
            if side is Side.BUY and anchor <= 1:
                continue
            eta = int(np.floor(rng.exponential(20.0)))
            book.insert_limit(side, limit_price(side, anchor, eta))
        elif operation < 0.9:
            book.execute_market(Side.BUY if rng.random() < 0.5 else Side.SELL)
        elif len(book):
            ids = list(book.order_ids())
            book.cancel(ids[int(rng.integers(0, len(ids)))])

        assert_uncrossed(book)
