from typing import Optional, Sequence

from loguru import logger
from pydantic import ValidationError

from src.core.config import AppConfig
from src.core.exceptions import ConfigurationError, LobcalError
from src.core.logger import setup_logger
from src.core.utils.time import datetime_now
from src.infrastructure.di import create_container
from src.infrastructure.storage import ArtifactRepository

from .commands import COMMANDS
from .parser import build_parser, collect_overrides

IO_EXIT_CODE = 2
UNEXPECTED_EXIT_CODE = 3


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    started_at = datetime_now().isoformat()
    setup_logger()

    container = None
    try:
        config = AppConfig.get(getattr(args, "config", None), **collect_overrides(args))
        setup_logger(config.log_level, config.log_dir)
        logger.info(f"Running '{args.command}' with profile '{config.profile}'")

        container = create_container(config)
        seeds = COMMANDS[args.command](container, args)
        container.get(ArtifactRepository).append_manifest(args.command, seeds, started_at)
    except ValidationError as exception:
        logger.error(str(exception))
        return ConfigurationError.exit_code
    except LobcalError as exception:
        logger.error(f"{type(exception).__name__}: {exception}")
        return exception.exit_code
    except OSError as exception:
        logger.error(f"I/O error: {exception}")
        return IO_EXIT_CODE
    except Exception as exception:
        logger.exception(f"Unexpected error: {exception}")
        return UNEXPECTED_EXIT_CODE
    finally:
        if container is not None:
            container.close()

    logger.info(f"Command '{args.command}' finished")
    return 0


__all__ = ["main"]
