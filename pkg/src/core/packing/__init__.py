"""
Packing Module for the bottom-left placement toolkit.

This module provides exact-rational rectangle geometry, the directional
relations and stability tests between placed rectangles, bottom-left corner
enumeration, and the sequencing machinery that turns feasible packings into
checkable sequences of bottom-left placement actions.
"""

from .errors import (
    PackingError,
    InvalidDimensionError,
    InvalidInstanceError,
    InvalidPackingError,
    InfeasiblePackingError,
    UnstablePackingError,
    NonIntegerInstanceError,
    ReplayError,
    ActionNotACornerError,
    DuplicateActionError,
    UnknownRectError,
    FormatError,
)
from .geometry import (
    Scalar,
    Orientation,
    Dims,
    Placement,
    PlacedRect,
    Instance,
    Packing,
    effective_dims,
    overlap_area,
    outside_overlap,
    total_overlap,
    total_coordinate,
    is_feasible,
    scale_instance,
    scale_packing,
)
from .relations import (
    Direction,
    is_over,
    is_right_of,
    can_move_freely,
    is_blocked,
    is_bl_stable_rect,
    is_bl_stable,
    max_slide,
    settle,
)
from .corners import Corner, candidate_grid, enumerate_corners, corner_bound
from .sequencing import (
    PlacementAction,
    PlacementSequence,
    escape_walk,
    escape_candidate,
    extraction_order,
    stabilize,
    extract_sequence,
    replay,
)
from .utils import to_scalar, format_scalar

__all__ = [
    "PackingError", "InvalidDimensionError", "InvalidInstanceError", "InvalidPackingError",
    "InfeasiblePackingError", "UnstablePackingError", "NonIntegerInstanceError",
    "ReplayError", "ActionNotACornerError", "DuplicateActionError", "UnknownRectError",
    "FormatError",
    "Scalar", "Orientation", "Dims", "Placement", "PlacedRect", "Instance", "Packing",
    "effective_dims", "overlap_area", "outside_overlap", "total_overlap", "total_coordinate",
    "is_feasible", "scale_instance", "scale_packing",
    "Direction", "is_over", "is_right_of", "can_move_freely", "is_blocked",
    "is_bl_stable_rect", "is_bl_stable", "max_slide", "settle",
    "Corner", "candidate_grid", "enumerate_corners", "corner_bound",
    "PlacementAction", "PlacementSequence", "escape_walk", "escape_candidate",
    "extraction_order", "stabilize", "extract_sequence", "replay",
    "to_scalar", "format_scalar",
]
