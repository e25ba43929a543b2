from enum import IntEnum, StrEnum, auto


class UpperStrEnum(StrEnum):
    @staticmethod
    def _generate_next_value_(name: str, start: int, count: int, last_values: list) -> str:
        return name


class Side(UpperStrEnum):
    BUY = auto()
    SELL = auto()


class TradeSign(IntEnum):
    BUYER = 1
    SELLER = -1


class TickKind(StrEnum):
    TRADE = "Trade"
    QUOTE = "Quote"
    AUCTION_QUOTE = "AuctionQuote"


class PlacementMode(StrEnum):
    FIXED = auto()  # exactly floor(rate * N_A) orders per step
    BERNOULLI = auto()  # each agent active with probability rate


class InitReference(StrEnum):
    FIXED = auto()  # p_a = p_b = p0 for every initialization step
    UPDATED = auto()  # re-read the book, falling back to p0 for an empty side


class ReplicationAggregation(StrEnum):
    AVERAGE_MOMENTS = auto()
    AVERAGE_OBJECTIVES = auto()


class MomentBasis(StrEnum):
    LEVELS = auto()
    RETURNS = auto()  # kurtosis of log returns, remaining moments on levels


class FreeParameter(StrEnum):
    DELTA = "delta"
    LAMBDA0 = "lambda0"
    C_LAMBDA = "c_lambda"
    DELTA_S = "delta_s"
    ALPHA = "alpha"
    MU = "mu"

    @property
    def is_probability(self) -> bool:
        return self in (
            FreeParameter.DELTA,
            FreeParameter.DELTA_S,
            FreeParameter.ALPHA,
            FreeParameter.MU,
        )


class CalibrationMethod(UpperStrEnum):
    NM = auto()
    GA = auto()


class ThresholdKind(StrEnum):
    GEOMETRIC = auto()
    NONE = auto()


class Profile(StrEnum):
    FULL = auto()
    DESK = auto()


class SignSource(StrEnum):
    DATA = auto()
    SIMULATION = auto()


class SyntheticGenerator(StrEnum):
    MODEL = auto()
    WALK = auto()


class ParamPreset(StrEnum):
    CONFIG = auto()
    DEFAULT = auto()  # the reference parameter set
    CALIBRATED = auto()  # the best calibrated parameter set
