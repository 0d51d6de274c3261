import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from commands import register_all
from config import config
from utils import CharnumError, configure_logging, dump_json

logger = logging.getLogger("charnum")


def create_app() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charnum",
        description="Characteristic numbers of model varieties and realization of integer vectors.",
    )
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="logging level (stderr)")

    # --- Register every command group ---
    subparsers = parser.add_subparsers(dest="verb", metavar="VERB")
    subparsers.required = True
    register_all(subparsers)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Exit codes: 0 success, 1 domain error or failed self-test, 2 usage error.
    """
    parser = create_app()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level)
    try:
        payload, lines = args.handler(args)
    except (CharnumError, ValidationError) as e:
        logger.error("%s failed: %s", args.verb, e)
        print(f"error: {e}", file=sys.stderr)
        return 1

    if args.json:
        print(dump_json(payload))
    else:
        print("\n".join(lines))
    if getattr(payload, "passed", True) is False:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
