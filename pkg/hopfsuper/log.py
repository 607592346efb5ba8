"""structlog configuration shared by the CLI and the tests."""

import logging
import sys

import structlog
from structlog.typing import Processor


def _level_names() -> dict[str, int]:
    # logging.getLevelNamesMapping is 3.11+; on older interpreters read the same table directly.
    getter = getattr(logging, "getLevelNamesMapping", None)
    return getter() if getter is not None else dict(logging._nameToLevel)


def configure_logging(level: str = "INFO", json_output: bool = False) -> None:
    """Configure structlog once per process; events go to stderr so stdout stays clean.

    Args:
        level: Minimum level name, e.g. "DEBUG"
        json_output: Render JSON lines instead of the console renderer
    """
    renderer: Processor = structlog.processors.JSONRenderer() if json_output else structlog.dev.ConsoleRenderer()
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(_level_names()[level.upper()]),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
