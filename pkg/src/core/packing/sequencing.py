"""
Sequencing Module for the packing toolkit.

Turns feasible packings into ordered sequences of bottom-left placement
actions and checks such sequences:

  - escape_candidate / extraction_order take rectangles out one at a time,
    each able to move up and right freely among those still present.
  - stabilize re-inserts them in reverse order and settles each one, giving
    a bottom-left stable packing and the sequence that builds it.
  - replay is the certificate checker: every action must land on a corner
    of the partial packing built so far.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .corners import enumerate_corners
from .errors import (
    ActionNotACornerError,
    DuplicateActionError,
    InfeasiblePackingError,
    UnknownRectError,
    UnstablePackingError,
)
from .geometry import Instance, Orientation, Packing, Placement, is_feasible
from .relations import _blocked_down, _blocked_left, is_over, settle

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlacementAction:
    """Place rectangle `rect_id` in orientation `v` with its bottom-left corner at (x, y)."""
    rect_id: int
    v: Orientation
    x: Fraction
    y: Fraction

    @property
    def corner(self) -> Tuple[Fraction, Fraction]:
        return (self.x, self.y)

    @property
    def placement(self) -> Placement:
        return Placement(self.x, self.y, self.v)


@dataclass(frozen=True)
class PlacementSequence:
    """An ordered list of placement actions bound to an instance."""
    instance: Instance
    actions: Tuple[PlacementAction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))

    def __len__(self) -> int:
        return len(self.actions)

    @property
    def order(self) -> List[int]:
        return [a.rect_id for a in self.actions]


def _require_feasible(p: Packing) -> None:
    if not is_feasible(p):
        raise InfeasiblePackingError("operation requires a feasible packing")


def _top_right_key(r) -> Tuple[Fraction, Fraction]:
    return (r.right, r.top)


def escape_walk(p: Packing) -> List[int]:
    """
    The search path used by escape_candidate, ending at the escaping rectangle.

    Rectangles are numbered by increasing (x, y) of their top-right corners.
    The walk starts at the highest numbered one and keeps jumping to the
    highest numbered rectangle over the current one until nothing is over it.
    Every jump lands strictly higher (a rectangle over another in a feasible
    packing lies entirely above it), so the walk has at most n steps.

    Raises:
        InfeasiblePackingError: If `p` is infeasible or empty
    """
    _require_feasible(p)
    if not p.rects:
        raise InfeasiblePackingError("escape_candidate needs a non-empty packing")
    numbered = sorted(p.rects, key=_top_right_key)
    keys = [_top_right_key(r) for r in numbered]
    # two non-overlapping closed rectangles never share a top-right corner
    assert len(set(keys)) == len(keys), "duplicate top-right corners in a feasible packing"

    current = numbered[-1]
    path = [current.id]
    while True:
        over = [r for r in numbered if r.id != current.id and is_over(r, current)]
        if not over:
            return path
        nxt = over[-1]
        assert nxt.top > current.top
        current = nxt
        path.append(current.id)


def escape_candidate(p: Packing) -> int:
    """
    A rectangle that can move up and right freely, container borders ignored.

    Raises:
        InfeasiblePackingError: If `p` is infeasible or empty
    """
    return escape_walk(p)[-1]


def extraction_order(p: Packing) -> List[int]:
    """
    Remove escape candidates one at a time until the packing is empty.

    A rectangle removed later is never over, nor right of, one removed earlier.

    Returns:
        Rectangle ids in removal order
    """
    _require_feasible(p)
    remaining = p
    order: List[int] = []
    while remaining.rects:
        rid = escape_candidate(remaining)
        order.append(rid)
        remaining = remaining.without(rid)
    return order


def stabilize(p: Packing) -> Tuple[Packing, PlacementSequence]:
    """
    Replace a feasible packing by a bottom-left stable one.

    Rectangles are re-inserted in reverse extraction order at their original
    placement and each is settled against those already inserted.
    Orientations are kept and the coordinate sum never increases.

    Returns:
        The stable packing and the placement sequence that builds it

    Raises:
        InfeasiblePackingError: If `p` is not feasible
    """
    order = extraction_order(p)
    current = Packing.empty(p.instance)
    actions: List[PlacementAction] = []
    for rid in reversed(order):
        original = p.get(rid)
        current = current.with_rect(original)
        final = settle(rid, current)
        current = current.place(rid, final)
        actions.append(PlacementAction(rid, final.v, final.x, final.y))
    logger.debug(f"Stabilized packing of {len(order)} rectangles")
    return current, PlacementSequence(p.instance, tuple(actions))


def extract_sequence(p: Packing) -> PlacementSequence:
    """
    The placement sequence that rebuilds a bottom-left stable packing exactly.

    Raises:
        InfeasiblePackingError: If `p` is not feasible
        UnstablePackingError: If `p` is feasible but not bottom-left stable
    """
    _require_feasible(p)
    unstable = [r.id for r in p.rects if not (_blocked_down(r, p) and _blocked_left(r, p))]
    if unstable:
        raise UnstablePackingError(
            f"packing is not bottom-left stable (rectangles {unstable} can slide)")
    rebuilt, sequence = stabilize(p)
    if rebuilt != p:
        # stable inputs are fixed points of stabilize
        raise AssertionError("stabilize moved a rectangle of a stable packing")
    return sequence


def replay(instance: Instance, sequence: PlacementSequence) -> Packing:
    """
    Apply a placement sequence, checking every action against the corners of
    the partial packing built so far.

    Returns:
        The resulting packing (feasible and bottom-left stable)

    Raises:
        UnknownRectError: If an action names an id absent from the instance
        DuplicateActionError: If a rectangle is placed twice
        ActionNotACornerError: If an action's position is not a corner
    """
    current = Packing.empty(instance)
    for index, action in enumerate(sequence.actions):
        if not instance.has_id(action.rect_id):
            raise UnknownRectError(
                f"action {index} references unknown rectangle {action.rect_id}", index=index)
        if action.rect_id in current:
            raise DuplicateActionError(
                f"action {index} places rectangle {action.rect_id} a second time", index=index)
        corners = enumerate_corners(current, instance.dims_of(action.rect_id), action.v)
        if not any(c.position == action.corner for c in corners):
            raise ActionNotACornerError(index, action.rect_id, action.corner)
        current = current.place(action.rect_id, action.placement)
    return current
