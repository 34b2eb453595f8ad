"""
Helper functions shared by the command-line subcommands.
"""

import logging
import sys
from typing import Optional, Tuple

from src.core.io.formats import parse_instance, parse_packing
from src.core.packing.errors import FormatError, InfeasiblePackingError
from src.core.packing.geometry import Dims, Instance, Packing, is_feasible
from src.core.packing.utils import to_scalar
from src.core.solver.exact_solver import VerdictStatus

logger = logging.getLogger(__name__)

# Exit codes
EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_UNKNOWN = 2
EXIT_INPUT_ERROR = 3

# verify / replay reuse the SAT and UNSAT codes for "holds" and "does not hold"
EXIT_OK = EXIT_SAT
EXIT_FAILED = EXIT_UNSAT

VERDICT_EXIT_CODES = {
    VerdictStatus.SAT: EXIT_SAT,
    VerdictStatus.UNSAT: EXIT_UNSAT,
    VerdictStatus.UNKNOWN: EXIT_UNKNOWN,
}


def read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from e


def write_output(text: str, path: Optional[str]) -> None:
    """Write `text` to `path`, or to stdout when no path is given."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise FormatError(f"cannot write {path}: {e.strerror}") from e
    logger.info(f"Wrote {path}")


def load_instance(path: str) -> Instance:
    return parse_instance(read_text(path))


def load_instance_and_packing(instance_path: str, packing_path: str) -> Tuple[Instance, Packing]:
    instance = load_instance(instance_path)
    return instance, parse_packing(read_text(packing_path), instance)


def require_feasible(packing: Packing) -> Packing:
    """Reject packings that overlap or leave the container before corner queries."""
    if not is_feasible(packing):
        raise InfeasiblePackingError("packing is infeasible; corners need a feasible packing")
    return packing


def parse_dims_arg(text: str) -> Dims:
    """Parse a "WxH" command-line value such as "2x1" or "0.5x1/3"."""
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise FormatError(f"expected WxH, got {text!r}", field="--dims")
    try:
        return Dims(to_scalar(parts[0]), to_scalar(parts[1]))
    except ValueError as e:
        raise FormatError(str(e), field="--dims") from e
