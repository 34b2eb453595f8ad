"""
Corners Module for the packing toolkit.

Enumerates the bottom-left corners available to a rectangle of given
effective dims in a partial packing.

A position blocked on the left has its x equal to 0 or to some placed
rectangle's right edge; blocked below, its y equals 0 or some top edge. So
every corner lies on the grid ({0} u right edges) x ({0} u top edges), which
has at most (k+1)^2 points for k placed rectangles.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Set, Tuple

from .geometry import Dims, Orientation, Packing, effective_dims, fits_at

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Corner:
    """
    A bottom-left corner for a specific rectangle.

    `left_support` / `bottom_support` name the rectangle that blocks the move,
    or None when the left wall / floor does.
    """
    x: Fraction
    y: Fraction
    left_support: Optional[int] = None
    bottom_support: Optional[int] = None

    @property
    def position(self) -> Tuple[Fraction, Fraction]:
        return (self.x, self.y)

    def describe(self) -> str:
        left = "wall" if self.left_support is None else f"rect {self.left_support}"
        below = "floor" if self.bottom_support is None else f"rect {self.bottom_support}"
        return f"({self.x}, {self.y}) left={left} below={below}"


def corner_bound(k: int) -> int:
    """Upper bound on the number of corners with k rectangles placed."""
    return (k + 1) ** 2


def candidate_grid(p: Packing) -> Set[Tuple[Fraction, Fraction]]:
    """All (x, y) with x in {0} u right edges and y in {0} u top edges."""
    xs = {Fraction(0)} | {r.right for r in p.rects}
    ys = {Fraction(0)} | {r.top for r in p.rects}
    return {(x, y) for x in xs for y in ys}


def _left_support(p: Packing, x: Fraction, y: Fraction, top: Fraction) -> Optional[int]:
    for r in p.rects:
        if r.right == x and min(top, r.top) > max(y, r.bottom):
            return r.id
    return None


def _bottom_support(p: Packing, x: Fraction, y: Fraction, right: Fraction) -> Optional[int]:
    for r in p.rects:
        if r.top == y and min(right, r.right) > max(x, r.left):
            return r.id
    return None


def enumerate_corners(p: Packing, dims: Dims, v: Orientation) -> List[Corner]:
    """
    Positions where a rectangle of `dims` in orientation `v` fits, overlaps
    nothing, and is blocked both downward and leftward.

    Args:
        p: A feasible (partial) packing
        dims: The rectangle's dims as given in the instance
        v: Orientation to place it in

    Returns:
        Corners sorted by (y, x), lowest then leftmost first
    """
    eff = effective_dims(dims, v)
    corners: List[Corner] = []
    for x, y in candidate_grid(p):
        if not fits_at(p, eff, x, y):
            continue
        if x == 0:
            left = None
        else:
            left = _left_support(p, x, y, y + eff.h)
            if left is None:
                continue
        if y == 0:
            below = None
        else:
            below = _bottom_support(p, x, y, x + eff.w)
            if below is None:
                continue
        corners.append(Corner(x, y, left, below))
    corners.sort(key=lambda c: (c.y, c.x))
    return corners
