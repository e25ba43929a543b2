from typing import ClassVar


class LobcalError(Exception):
    """Base error carrying the CLI exit code"""

    exit_code: ClassVar[int] = 3


class ConfigurationError(LobcalError):
    """Raised when configuration or command arguments are invalid"""

    exit_code = 1


#


class DataError(LobcalError):
    exit_code = 2


class ParseError(DataError):
    """Raised when a tick row violates the CSV schema"""

    def __init__(self, line: int, reason: str) -> None:
        self.line = line
        self.reason = reason
        super().__init__(f"Line {line}: {reason}")


class OutOfOrderError(DataError):
    """Raised when tick timestamps decrease"""

    def __init__(self, line: int, timestamp: int, previous: int) -> None:
        self.line = line
        super().__init__(f"Line {line}: timestamp '{timestamp}' is before '{previous}'")


class EmptySessionError(DataError):
    """Raised when a trading day has no quotes inside the session window"""

    def __init__(self, day: str) -> None:
        self.day = day
        super().__init__(f"Trading day '{day}' has no quotes in the session window")


#


class NumericError(LobcalError):
    exit_code = 3


class DegenerateVarianceError(NumericError):
    """Raised when the q_taker variance is zero and the placement depth is undefined"""


class DegenerateSeriesError(NumericError):
    """Raised when a statistic is undefined for a constant series"""


class SingularMatrixError(NumericError):
    """Raised when the moment covariance cannot be inverted even after regularization"""


#


class BookError(LobcalError):
    exit_code = 3


class CrossedBookError(BookError):
    """Raised when an insertion would cross the book"""


class MissingReferenceError(BookError):
    """Raised when the opposing best quote needed for pricing is absent"""


class InvalidPriceError(BookError):
    """Raised for limit prices below one tick"""
