"""
Relations and Stability Module for the packing toolkit.

Directional relations between placed rectangles and the bottom-left
stability tests built on them.

Two movement semantics coexist here and must not be conflated:
  - "over" / "right-of" ask whether SOME upward (rightward) displacement
    d > 0 of rectangle i would make it overlap j. Teleporting is allowed,
    so a rectangle above with a gap still counts.
  - "blocked" asks whether a continuous slide down (left) is impossible,
    which requires touching support from the floor, the left wall, or a
    rectangle.
"""

import logging
from enum import Enum
from fractions import Fraction

from .errors import InfeasiblePackingError
from .geometry import Packing, PlacedRect, Placement, is_feasible, x_overlap, y_overlap

# Set up logging
logger = logging.getLogger(__name__)


class Direction(Enum):
    """Axis-aligned movement directions."""
    DOWN = "down"
    LEFT = "left"
    UP = "up"
    RIGHT = "right"


def _require_distinct(j: PlacedRect, i: PlacedRect) -> None:
    if j.id == i.id:
        raise ValueError(f"relation needs two distinct rectangles, got id {i.id} twice")


def _require_feasible(p: Packing) -> None:
    if not is_feasible(p):
        raise InfeasiblePackingError("operation requires a feasible packing")


def is_over(j: PlacedRect, i: PlacedRect) -> bool:
    """True iff moving `i` up by some d > 0 makes it overlap `j`."""
    _require_distinct(j, i)
    return x_overlap(i, j) > 0 and j.top > i.bottom


def is_right_of(j: PlacedRect, i: PlacedRect) -> bool:
    """True iff moving `i` right by some d > 0 makes it overlap `j`."""
    _require_distinct(j, i)
    return y_overlap(i, j) > 0 and j.right > i.left


def can_move_freely(i: int, p: Packing, direction: Direction) -> bool:
    """
    Whether rectangle `i` can move up (or right) arbitrarily far without
    meeting another rectangle. Container borders are ignored.

    Raises:
        ValueError: If direction is not UP or RIGHT
    """
    target = p.get(i)
    if direction is Direction.UP:
        relation = is_over
    elif direction is Direction.RIGHT:
        relation = is_right_of
    else:
        raise ValueError(f"can_move_freely supports up and right, got {direction.value}")
    return not any(relation(j, target) for j in p.others(i))


def _blocked_down(target: PlacedRect, p: Packing) -> bool:
    if target.bottom == 0:
        return True
    return any(x_overlap(target, j) > 0 and j.top == target.bottom for j in p.others(target.id))


def _blocked_left(target: PlacedRect, p: Packing) -> bool:
    if target.left == 0:
        return True
    return any(y_overlap(target, j) > 0 and j.right == target.left for j in p.others(target.id))


def is_blocked(i: int, p: Packing, direction: Direction) -> bool:
    """
    Whether rectangle `i` cannot slide down (or left) at all: it rests on the
    floor (left wall) or touches a rectangle along a positive-length edge.

    Raises:
        InfeasiblePackingError: If `p` is not feasible
        ValueError: If direction is not DOWN or LEFT
    """
    _require_feasible(p)
    target = p.get(i)
    if direction is Direction.DOWN:
        return _blocked_down(target, p)
    if direction is Direction.LEFT:
        return _blocked_left(target, p)
    raise ValueError(f"is_blocked supports down and left, got {direction.value}")


def is_bl_stable_rect(i: int, p: Packing) -> bool:
    """A rectangle is bottom-left stable when blocked both downward and leftward."""
    _require_feasible(p)
    target = p.get(i)
    return _blocked_down(target, p) and _blocked_left(target, p)


def is_bl_stable(p: Packing) -> bool:
    """A feasible packing is bottom-left stable when every rectangle is."""
    _require_feasible(p)
    return all(_blocked_down(r, p) and _blocked_left(r, p) for r in p.rects)


def _slide(target: PlacedRect, p: Packing, direction: Direction) -> Fraction:
    others = p.others(target.id)
    container = p.instance.container
    if direction is Direction.DOWN:
        floor = Fraction(0)
        for j in others:
            if x_overlap(target, j) > 0 and j.top <= target.bottom:
                floor = max(floor, j.top)
        return target.bottom - floor
    if direction is Direction.LEFT:
        wall = Fraction(0)
        for j in others:
            if y_overlap(target, j) > 0 and j.right <= target.left:
                wall = max(wall, j.right)
        return target.left - wall
    if direction is Direction.UP:
        ceiling = container.h
        for j in others:
            if x_overlap(target, j) > 0 and j.bottom >= target.top:
                ceiling = min(ceiling, j.bottom)
        return ceiling - target.top
    wall = container.w
    for j in others:
        if y_overlap(target, j) > 0 and j.left >= target.right:
            wall = min(wall, j.left)
    return wall - target.right


def max_slide(i: int, p: Packing, direction: Direction) -> Fraction:
    """
    Largest distance rectangle `i` can slide in `direction` while the packing
    stays feasible at every intermediate position.

    Down and left are stopped by the floor, the left wall and rectangles;
    up and right by the top and right borders and rectangles.

    Raises:
        InfeasiblePackingError: If `p` is not feasible
    """
    _require_feasible(p)
    return _slide(p.get(i), p, direction)


def settle(i: int, p: Packing) -> Placement:
    """
    Slide rectangle `i` down, then left, repeatedly until neither move is
    possible. Every other rectangle stays fixed.

    Each round ends with the corner on the finite grid of obstacle edges and
    strictly decreases x + y, so the loop terminates.

    Returns:
        The final placement of `i`

    Raises:
        InfeasiblePackingError: If `p` is not feasible
    """
    _require_feasible(p)
    current = p
    rounds = 0
    while True:
        target = current.get(i)
        down = _slide(target, current, Direction.DOWN)
        if down:
            target = target.moved_to(target.left, target.bottom - down)
            current = current.with_rect(target)
        left = _slide(target, current, Direction.LEFT)
        if left:
            target = target.moved_to(target.left - left, target.bottom)
            current = current.with_rect(target)
        if not down and not left:
            break
        rounds += 1
    if rounds:
        logger.debug(f"Settled rectangle {i} in {rounds} rounds at ({target.left}, {target.bottom})")
    return target.placement
