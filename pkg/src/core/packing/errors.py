"""
Error types for the packing toolkit.

Every error raised for bad input derives from PackingError, itself a
ValueError, so callers that only care about "invalid input" can catch the
base class.
"""

from typing import Optional, Tuple
from fractions import Fraction


class PackingError(ValueError):
    """Base class for all domain errors."""


class InvalidDimensionError(PackingError):
    """A width or height is not strictly positive."""


class InvalidInstanceError(PackingError):
    """An instance is malformed (duplicate ids, bad container, ...)."""


class InvalidPackingError(PackingError):
    """A packing does not match its instance (unknown id, wrong dims, ...)."""


class InfeasiblePackingError(PackingError):
    """An operation that requires a feasible packing received an infeasible one."""


class UnstablePackingError(PackingError):
    """An operation that requires a bottom-left stable packing received one that is not."""


class NonIntegerInstanceError(PackingError):
    """The lattice oracle only accepts instances with integer parameters."""


class ReplayError(PackingError):
    """A placement sequence failed certificate checking."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class ActionNotACornerError(ReplayError):
    """A placement action does not use a bottom-left corner of the current partial packing."""

    def __init__(self, index: int, rect_id: int, position: Tuple[Fraction, Fraction]):
        x, y = position
        super().__init__(
            f"action-not-a-corner: action {index} places rectangle {rect_id} at ({x}, {y}), "
            f"which is not a bottom-left corner",
            index=index,
        )
        self.rect_id = rect_id
        self.position = position


class DuplicateActionError(ReplayError):
    """The same rectangle is placed twice."""


class UnknownRectError(ReplayError):
    """An action references a rectangle id that is not in the instance."""


class FormatError(PackingError):
    """A document could not be parsed. Carries the offending field and line when known."""

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.field = field
        self.line = line
