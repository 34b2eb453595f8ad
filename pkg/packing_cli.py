"""
Command-line entry point for the packing toolkit.

Usage:
    python packing_cli.py solve instance.json [-o packing.json] [--seq seq.json]
    python packing_cli.py verify instance.json packing.json [--stable]
    python packing_cli.py replay instance.json sequence.json
    python packing_cli.py stabilize instance.json packing.json
    python packing_cli.py order instance.json packing.json
    python packing_cli.py corners instance.json packing.json --dims 2x1
    python packing_cli.py render instance.json packing.json -o out.svg
    python packing_cli.py oracle instance.json

Exit codes: 0 sat/ok, 1 unsat/check failed, 2 unknown (limit reached),
3 input error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from src.commands import check_commands, render_commands, solve_commands
from src.commands.command_helpers import EXIT_INPUT_ERROR
from src.core.packing.errors import PackingError
from src.utils.config import configure_logging, load_config

logger = logging.getLogger(__name__)

# Subcommand modules, registered in this order
COMMAND_MODULES = [solve_commands, check_commands, render_commands]


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="packing_cli",
        description="Bottom-left placement toolkit for rectangle packing",
    )
    parser.add_argument("--log-level", default=None,
                        help="override PACKING_LOG_LEVEL (DEBUG, INFO, WARNING, ...)")
    parser.add_argument("--env-file", default=None, help="read settings from this .env file")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)

    config = load_config(args.env_file)
    configure_logging(args.log_level or config["log_level"])
    args.config = config

    try:
        return args.handler(args)
    except PackingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as e:
        # bad limits such as --node-limit 0
        logger.debug("argument rejected", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
