"""Command-line entry point.

Exit codes: 0 success, 1 verification failure or table mismatch, 2 usage, schema or structure
errors, 3 I/O errors.
"""

import asyncio
import sys
from typing import List, Optional

import structlog
from pydantic import ValidationError

from ..config import load_settings
from ..errors import (
    CertificateError,
    HopfSuperError,
    MorphismError,
    NotSuperDatumError,
    RouteDisagreementError,
)
from ..log import configure_logging
from .commands import HANDLERS, Context
from .parser import build_parser

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

VERIFICATION_ERRORS = (MorphismError, NotSuperDatumError, CertificateError, RouteDisagreementError)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, configure logging and dispatch to a verb handler."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(args.config)
    except ValidationError as e:
        print(f"invalid settings: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"cannot read settings: {e}", file=sys.stderr)
        return EXIT_IO
    configure_logging("DEBUG" if args.verbose else settings.logging.level, settings.logging.json_output)

    ctx = Context(settings, args.conductor)
    try:
        return asyncio.run(HANDLERS[args.command](args, ctx))
    except VERIFICATION_ERRORS as e:
        logger.error("verification_failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (HopfSuperError, ValueError) as e:
        logger.error("command_failed", command=args.command, error_type=type(e).__name__, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error("io_failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


__all__ = ["main"]
