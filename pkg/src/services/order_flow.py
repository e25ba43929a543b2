import csv
from pathlib import Path

import numpy as np
from loguru import logger

from src.analysis import acf, classify_trade_signs
from src.core.constants import SIGNS_CSV_HEADER
from src.core.exceptions import ParseError
from src.core.utils.types import IntArray
from src.data import parse_ticks, session_filter
from src.models import AcfReport, SignClassification

from .base import BaseService


class OrderFlowService(BaseService):
    def classify(self, path: Path) -> SignClassification:
        with path.open(encoding="utf-8", newline="") as file:
            ticks = parse_ticks(file)

        window = self.config.data
        filtered = session_filter(ticks, window.session_start, window.session_end)
        classification = classify_trade_signs(filtered, window.quote_lag_ms)

        logger.info(
            f"Classified '{classification.signs.size}' trades "
            f"('{classification.by_quote}' by quote, '{classification.by_tick}' by tick test, "
            f"'{classification.unclassified}' unclassified)"
        )
        return classification

    def read_signs(self, path: Path) -> IntArray:
        signs: list[int] = []

        with path.open(encoding="utf-8", newline="") as file:
            reader = csv.reader(file)
            header = next(reader, None)
            if header is None or tuple(header) != SIGNS_CSV_HEADER:
                raise ParseError(1, f"expected header '{','.join(SIGNS_CSV_HEADER)}'")

            for line, row in enumerate(reader, start=2):
                if not row:
                    continue
                try:
                    sign = int(row[1])
                except (IndexError, ValueError) as exception:
                    raise ParseError(line, str(exception)) from exception
                if sign not in (1, -1):
                    raise ParseError(line, f"sign '{sign}' is not +1 or -1")
                signs.append(sign)

        return np.asarray(signs, dtype=np.int64)

    def acf_from_ticks(self, path: Path) -> AcfReport:
        return acf(self.classify(path).signs, self.config.statistics.acf_max_lag)

    def acf_from_signs(self, path: Path) -> AcfReport:
        return acf(self.read_signs(path), self.config.statistics.acf_max_lag)
