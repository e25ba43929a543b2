import msgspec
import numpy as np

from src.core.utils.types import BoolArray, FloatArray, IntArray


class Trade(msgspec.Struct, frozen=True):
    price: int
    sign: int  # +1 buyer initiated, -1 seller initiated


class TakerState(msgspec.Struct, frozen=True):
    q_taker: float
    q_var: float


class StepDiagnostics(msgspec.Struct, frozen=True):
    bid_depth: IntArray
    ask_depth: IntArray
    placed: IntArray
    skipped: IntArray
    taker_orders: IntArray
    trades: IntArray
    cancelled: IntArray
    mid_defined: BoolArray  # False where the mid was carried forward
    lambda_t: FloatArray
    q_taker: FloatArray

    @property
    def resting(self) -> IntArray:
        return self.bid_depth + self.ask_depth

    @property
    def depleted_steps(self) -> int:
        return int(np.count_nonzero(~self.mid_defined))


class SimulationOutput(msgspec.Struct, frozen=True):
    log_prices: FloatArray
    trade_signs: IntArray
    diagnostics: StepDiagnostics
    q_var: float
    initial_orders: int

    @property
    def steps(self) -> int:
        return int(self.log_prices.shape[0])
