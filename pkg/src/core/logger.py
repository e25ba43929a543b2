import inspect
import logging
import sys
from pathlib import Path
from typing import Final, Optional

from loguru import logger

LOG_FILENAME: Final[str] = "lobcal.log"
LOG_LEVEL: Final[str] = "INFO"
LOG_ROTATION: Final[str] = "00:00"
LOG_COMPRESSION: Final[str] = "zip"
LOG_RETENTION: Final[str] = "7 days"
LOG_ENCODING: Final[str] = "utf-8"
LOG_FORMAT: Final[str] = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{line}</cyan> | <level>{message}</level>"
)
WORKER_LOG_FORMAT: Final[str] = (
    "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<magenta>pid={process}</magenta> | <level>{message}</level>"
)


class InterceptHandler(logging.Handler):
    """Forward stdlib records, including captured numpy/scipy warnings, to loguru."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level: str | int = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = inspect.currentframe(), 0
        while frame is not None and (depth == 0 or _is_logging_frame(frame.f_code.co_filename)):
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def _is_logging_frame(filename: str) -> bool:
    return filename == logging.__file__ or ("importlib" in filename and "_bootstrap" in filename)


def _add_console(level: str, fmt: str) -> None:
    logger.add(sink=sys.stderr, level=level, format=fmt, colorize=True)


def setup_logger(level: str = LOG_LEVEL, log_dir: Optional[Path] = None) -> None:
    """Console sink always; a daily-rotated file under ``log_dir`` once it is known."""
    logger.remove()
    _add_console(level, LOG_FORMAT)

    if log_dir is not None:
        log_dir.mkdir(parents=True, exist_ok=True)
        logger.add(
            sink=log_dir / LOG_FILENAME,
            level=level,
            format=LOG_FORMAT,
            rotation=LOG_ROTATION,
            retention=LOG_RETENTION,
            compression=LOG_COMPRESSION,
            encoding=LOG_ENCODING,
        )

    handler = InterceptHandler()
    logging.basicConfig(handlers=[handler], level=logging.INFO, force=True)
    logging.captureWarnings(True)
    logging.getLogger("py.warnings").handlers = [handler]


def setup_worker_logger(level: str = LOG_LEVEL) -> None:
    logger.remove()
    _add_console(level, WORKER_LOG_FORMAT)
