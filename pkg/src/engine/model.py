from typing import Callable, NamedTuple, Optional

import numpy as np
from loguru import logger

from src.core.constants import INIT_STEPS, Q_TAKER_MEAN
from src.core.enums import InitReference, PlacementMode, Side
from src.core.exceptions import DegenerateVarianceError
from src.models import ModelParams, RunConfig, SimulationOutput, StepDiagnostics, TakerState, Trade

from .book import LimitOrderBook
from .provider import FixedReference, activity_count, place_provider_orders, placement_depth
from .random import substreams
from .taker import estimate_q_variance, step_q_taker

# Called with the book and the order side right before each market order executes
OrderHook = Callable[[LimitOrderBook, Side], None]
SnapshotHook = Callable[[int, LimitOrderBook], None]


class TakerOutcome(NamedTuple):
    trades: list[Trade]
    submitted: int


class StepResult(NamedTuple):
    taker: TakerState
    lambda_t: float
    mid: float
    mid_defined: bool
    trades: list[Trade]
    placed: int
    skipped: int
    submitted: int
    cancelled: int


def place_taker_orders(
    book: LimitOrderBook,
    params: ModelParams,
    taker: TakerState,
    rng: np.random.Generator,
    *,
    mode: PlacementMode = PlacementMode.FIXED,
    before_order: Optional[OrderHook] = None,
) -> TakerOutcome:
    count = activity_count(params.n_agents, params.mu, params.taker_orders, mode, rng)
    is_buy = rng.random(count) < taker.q_taker
    trades: list[Trade] = []

    for buy in is_buy.tolist():
        side = Side.BUY if buy else Side.SELL
        if before_order is not None:
            before_order(book, side)

        trade = book.execute_market(side)
        if trade is not None:
            trades.append(trade)

    return TakerOutcome(trades=trades, submitted=count)


def initialize_book(
    book: LimitOrderBook,
    params: ModelParams,
    p0: int,
    rng: np.random.Generator,
    *,
    mode: PlacementMode = PlacementMode.FIXED,
    reference: InitReference = InitReference.FIXED,
    cancellation: bool = False,
) -> int:
    """Run the provider-only warm-up around ``p0``; returns the number of orders placed."""
    fixed = FixedReference(ask=p0, bid=p0) if reference is InitReference.FIXED else None
    placed = 0

    for _ in range(INIT_STEPS):
        outcome = place_provider_orders(
            book,
            params,
            params.lambda0,
            rng,
            mode=mode,
            reference=fixed,
            fallback=p0,
        )
        placed += outcome.placed

        if cancellation:
            book.cancel_sweep(params.delta, rng)

    return placed


def run_mc_step(
    book: LimitOrderBook,
    params: ModelParams,
    taker: TakerState,
    lambda_t: float,
    last_mid: float,
    rng: np.random.Generator,
    *,
    mode: PlacementMode = PlacementMode.FIXED,
    before_order: Optional[OrderHook] = None,
) -> StepResult:
    provider = place_provider_orders(book, params, lambda_t, rng, mode=mode)
    taker_outcome = place_taker_orders(
        book,
        params,
        taker,
        rng,
        mode=mode,
        before_order=before_order,
    )
    cancelled = book.cancel_sweep(params.delta, rng)

    mid = book.mid_price()
    mid_defined = mid is not None

    next_taker = step_q_taker(taker, params.delta_s, rng)
    next_lambda = placement_depth(
        params.lambda0,
        params.c_lambda,
        next_taker.q_taker,
        next_taker.q_var,
    )

    return StepResult(
        taker=next_taker,
        lambda_t=next_lambda,
        mid=mid if mid is not None else last_mid,
        mid_defined=mid_defined,
        trades=taker_outcome.trades,
        placed=provider.placed,
        skipped=provider.skipped,
        submitted=taker_outcome.submitted,
        cancelled=cancelled,
    )


class PreisSimulation:
    """One seeded model run that can be advanced step by step.

    The q_taker variance pre-pass, the initialization and the main loop draw from
    separate sub-streams of ``run.seed``.
    """

    def __init__(self, params: ModelParams, run: RunConfig) -> None:
        self.params = params
        self.run_config = run

        streams = substreams(run.seed)
        self._rng = streams.main

        q_var = estimate_q_variance(params.delta_s, run.q_var_steps, streams.q_variance)
        if q_var <= 0:
            raise DegenerateVarianceError(
                f"q_taker variance is zero for delta_s '{params.delta_s}'"
            )

        self.book = LimitOrderBook()
        self.initial_orders = initialize_book(
            self.book,
            params,
            run.p0,
            streams.initialization,
            mode=run.placement_mode,
            reference=run.init_reference,
            cancellation=run.init_cancellation,
        )

        self.taker = TakerState(q_taker=Q_TAKER_MEAN, q_var=q_var)
        self.lambda_t = placement_depth(params.lambda0, params.c_lambda, Q_TAKER_MEAN, q_var)

        mid = self.book.mid_price()
        self.mid = mid if mid is not None else float(run.p0)
        self.step_index = 0

    def step(self, before_order: Optional[OrderHook] = None) -> StepResult:
        result = run_mc_step(
            self.book,
            self.params,
            self.taker,
            self.lambda_t,
            self.mid,
            self._rng,
            mode=self.run_config.placement_mode,
            before_order=before_order,
        )
        self.taker = result.taker
        self.lambda_t = result.lambda_t
        self.mid = result.mid
        self.step_index += 1
        return result

    def run(
        self,
        snapshot_every: Optional[int] = None,
        on_snapshot: Optional[SnapshotHook] = None,
    ) -> SimulationOutput:
        steps = self.run_config.steps

        mids = np.empty(steps, dtype=np.float64)
        bid_depth = np.empty(steps, dtype=np.int64)
        ask_depth = np.empty(steps, dtype=np.int64)
        placed = np.empty(steps, dtype=np.int64)
        skipped = np.empty(steps, dtype=np.int64)
        submitted = np.empty(steps, dtype=np.int64)
        trades = np.empty(steps, dtype=np.int64)
        cancelled = np.empty(steps, dtype=np.int64)
        mid_defined = np.empty(steps, dtype=np.bool_)
        lambda_t = np.empty(steps, dtype=np.float64)
        q_taker = np.empty(steps, dtype=np.float64)
        signs: list[int] = []

        for t in range(steps):
            lambda_t[t] = self.lambda_t
            q_taker[t] = self.taker.q_taker

            result = self.step()

            mids[t] = result.mid
            mid_defined[t] = result.mid_defined
            bid_depth[t] = self.book.depth(Side.BUY)
            ask_depth[t] = self.book.depth(Side.SELL)
            placed[t] = result.placed
            skipped[t] = result.skipped
            submitted[t] = result.submitted
            trades[t] = len(result.trades)
            cancelled[t] = result.cancelled
            signs.extend(trade.sign for trade in result.trades)

            if on_snapshot is not None and snapshot_every and (t + 1) % snapshot_every == 0:
                on_snapshot(t + 1, self.book)

        diagnostics = StepDiagnostics(
            bid_depth=bid_depth,
            ask_depth=ask_depth,
            placed=placed,
            skipped=skipped,
            taker_orders=submitted,
            trades=trades,
            cancelled=cancelled,
            mid_defined=mid_defined,
            lambda_t=lambda_t,
            q_taker=q_taker,
        )

        if diagnostics.depleted_steps:
            logger.debug(
                f"Seed '{self.run_config.seed}' carried the mid forward "
                f"on '{diagnostics.depleted_steps}' of '{steps}' steps"
            )

        return SimulationOutput(
            log_prices=np.log(mids * self.run_config.tick_size),
            trade_signs=np.asarray(signs, dtype=np.int64),
            diagnostics=diagnostics,
            q_var=self.taker.q_var,
            initial_orders=self.initial_orders,
        )


def simulate(params: ModelParams, run: RunConfig) -> SimulationOutput:
    return PreisSimulation(params, run).run()
