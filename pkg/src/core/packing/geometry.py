"""
Geometry Module for the packing toolkit.

Exact-rational rectangle geometry: instances, placements, packings, overlap
areas, feasibility, and the two scalar objectives used by stabilization
(total overlap O and coordinate sum L).

Rectangles are closed regions. Two rectangles overlap only when their
intersection has positive area, so edge and corner contact is allowed.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidDimensionError, InvalidInstanceError, InvalidPackingError
from .utils import ScalarLike, to_scalar

# Set up logging
logger = logging.getLogger(__name__)

Scalar = Fraction


class Orientation(Enum):
    """Orientation flag of a placed rectangle. VERTICAL swaps width and height."""
    HORIZONTAL = "h"
    VERTICAL = "v"


@dataclass(frozen=True)
class Dims:
    """A width-height pair, both strictly positive."""
    w: Fraction
    h: Fraction

    def __post_init__(self):
        w, h = to_scalar(self.w), to_scalar(self.h)
        if w <= 0 or h <= 0:
            raise InvalidDimensionError(f"non-positive dimension: {w} x {h}")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "h", h)

    @property
    def area(self) -> Fraction:
        return self.w * self.h

    @property
    def is_square(self) -> bool:
        return self.w == self.h

    def __str__(self) -> str:
        return f"{self.w}x{self.h}"


@dataclass(frozen=True)
class Placement:
    """Bottom-left corner coordinates plus orientation."""
    x: Fraction
    y: Fraction
    v: Orientation = Orientation.HORIZONTAL

    def __post_init__(self):
        object.__setattr__(self, "x", to_scalar(self.x))
        object.__setattr__(self, "y", to_scalar(self.y))
        if not isinstance(self.v, Orientation):
            object.__setattr__(self, "v", Orientation(self.v))


def effective_dims(dims: Dims, v: Orientation) -> Dims:
    """Return (w, h) for a horizontal placement and (h, w) for a vertical one."""
    if v is Orientation.VERTICAL:
        return Dims(dims.h, dims.w)
    return dims


@dataclass(frozen=True)
class PlacedRect:
    """
    A rectangle of the instance together with its placement.

    `dims` are the dims given in the instance; the occupied box uses the
    effective dims after orientation.
    """
    id: int
    dims: Dims
    placement: Placement

    @property
    def effective(self) -> Dims:
        return effective_dims(self.dims, self.placement.v)

    @property
    def left(self) -> Fraction:
        return self.placement.x

    @property
    def bottom(self) -> Fraction:
        return self.placement.y

    @property
    def right(self) -> Fraction:
        return self.placement.x + self.effective.w

    @property
    def top(self) -> Fraction:
        return self.placement.y + self.effective.h

    @property
    def area(self) -> Fraction:
        return self.dims.area

    def moved_to(self, x: ScalarLike, y: ScalarLike) -> "PlacedRect":
        return PlacedRect(self.id, self.dims, Placement(x, y, self.placement.v))


@dataclass(frozen=True)
class Instance:
    """
    A container plus an ordered multiset of rectangles with stable ids.

    Use Instance.from_dims() to number rectangles 1..n automatically.
    """
    container: Dims
    rects: Tuple[Tuple[int, Dims], ...] = ()

    def __post_init__(self):
        if not isinstance(self.container, Dims):
            raise InvalidInstanceError("container must be a Dims value")
        items = tuple((int(rid), d) for rid, d in self.rects)
        seen = set()
        for rid, d in items:
            if rid in seen:
                raise InvalidInstanceError(f"duplicate rectangle id {rid}")
            if not isinstance(d, Dims):
                raise InvalidInstanceError(f"rectangle {rid} has no valid dims")
            seen.add(rid)
        object.__setattr__(self, "rects", items)
        object.__setattr__(self, "_by_id", dict(items))

    @classmethod
    def from_dims(cls, container: Dims, dims: Iterable[Dims]) -> "Instance":
        return cls(container, tuple((i, d) for i, d in enumerate(dims, start=1)))

    @property
    def n(self) -> int:
        return len(self.rects)

    @property
    def ids(self) -> List[int]:
        return [rid for rid, _ in self.rects]

    def dims_of(self, rect_id: int) -> Dims:
        try:
            return self._by_id[rect_id]
        except KeyError:
            raise InvalidPackingError(f"unknown rectangle id {rect_id}") from None

    def has_id(self, rect_id: int) -> bool:
        return rect_id in self._by_id

    @property
    def total_area(self) -> Fraction:
        return sum((d.area for _, d in self.rects), Fraction(0))

    def is_integral(self) -> bool:
        values = [self.container.w, self.container.h]
        for _, d in self.rects:
            values.extend((d.w, d.h))
        return all(v.denominator == 1 for v in values)


@dataclass(frozen=True)
class Packing:
    """
    Placements for a subset of an instance's rectangles.

    Rectangles are kept sorted by id so two packings with the same
    placements compare equal regardless of construction order.
    """
    instance: Instance
    rects: Tuple[PlacedRect, ...] = ()
    _index: Dict[int, PlacedRect] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        by_id: Dict[int, PlacedRect] = {}
        for r in self.rects:
            if r.id in by_id:
                raise InvalidPackingError(f"rectangle {r.id} placed more than once")
            expected = self.instance.dims_of(r.id)
            if r.dims != expected:
                raise InvalidPackingError(
                    f"rectangle {r.id} has dims {r.dims}, instance says {expected}")
            by_id[r.id] = r
        object.__setattr__(self, "rects", tuple(sorted(self.rects, key=lambda r: r.id)))
        object.__setattr__(self, "_index", by_id)

    @classmethod
    def empty(cls, instance: Instance) -> "Packing":
        return cls(instance, ())

    @classmethod
    def from_placements(cls, instance: Instance,
                        placements: Dict[int, Placement]) -> "Packing":
        return cls(instance, tuple(
            PlacedRect(rid, instance.dims_of(rid), pl) for rid, pl in placements.items()))

    @property
    def ids(self) -> List[int]:
        return [r.id for r in self.rects]

    def __len__(self) -> int:
        return len(self.rects)

    def __iter__(self) -> Iterator[PlacedRect]:
        return iter(self.rects)

    def __contains__(self, rect_id: int) -> bool:
        return rect_id in self._index

    def get(self, rect_id: int) -> PlacedRect:
        try:
            return self._index[rect_id]
        except KeyError:
            raise InvalidPackingError(f"rectangle {rect_id} is not placed") from None

    def others(self, rect_id: int) -> List[PlacedRect]:
        return [r for r in self.rects if r.id != rect_id]

    def place(self, rect_id: int, placement: Placement) -> "Packing":
        """Return a new packing with `rect_id` placed (or moved) to `placement`."""
        pr = PlacedRect(rect_id, self.instance.dims_of(rect_id), placement)
        return Packing(self.instance, tuple(self.others(rect_id)) + (pr,))

    def with_rect(self, pr: PlacedRect) -> "Packing":
        return Packing(self.instance, tuple(self.others(pr.id)) + (pr,))

    def without(self, rect_id: int) -> "Packing":
        return Packing(self.instance, tuple(self.others(rect_id)))

    def placements(self) -> Dict[int, Placement]:
        return {r.id: r.placement for r in self.rects}

    @property
    def is_complete(self) -> bool:
        return len(self.rects) == self.instance.n


def _overlap_len(a_lo: Fraction, a_hi: Fraction, b_lo: Fraction, b_hi: Fraction) -> Fraction:
    return max(Fraction(0), min(a_hi, b_hi) - max(a_lo, b_lo))


def x_overlap(a: PlacedRect, b: PlacedRect) -> Fraction:
    """Length of the intersection of the x-projections (0 on contact)."""
    return _overlap_len(a.left, a.right, b.left, b.right)


def y_overlap(a: PlacedRect, b: PlacedRect) -> Fraction:
    """Length of the intersection of the y-projections (0 on contact)."""
    return _overlap_len(a.bottom, a.top, b.bottom, b.top)


def overlap_area(a: PlacedRect, b: PlacedRect) -> Fraction:
    """
    Area of the intersection of two placed rectangles.

    Raises:
        ValueError: If both arguments are the same rectangle
    """
    if a.id == b.id:
        raise ValueError(f"overlap_area needs two distinct rectangles, got id {a.id} twice")
    return x_overlap(a, b) * y_overlap(a, b)


def outside_overlap(r: PlacedRect, container: Dims) -> Fraction:
    """Area of `r` lying outside the container [0, W] x [0, H]."""
    inside_w = _overlap_len(r.left, r.right, Fraction(0), container.w)
    inside_h = _overlap_len(r.bottom, r.top, Fraction(0), container.h)
    return r.area - inside_w * inside_h


def total_overlap(p: Packing) -> Fraction:
    """
    Sum of all pairwise overlap areas plus every rectangle's area outside
    the container. Zero exactly when the packing is feasible.
    """
    total = Fraction(0)
    for a, b in combinations(p.rects, 2):
        total += overlap_area(a, b)
    for r in p.rects:
        total += outside_overlap(r, p.instance.container)
    return total


def total_coordinate(p: Packing) -> Fraction:
    """Sum of x + y over all placed rectangles."""
    return sum((r.left + r.bottom for r in p.rects), Fraction(0))


def inside_container(r: PlacedRect, container: Dims) -> bool:
    return r.left >= 0 and r.bottom >= 0 and r.right <= container.w and r.top <= container.h


def overlaps(a: PlacedRect, b: PlacedRect) -> bool:
    """True when the intersection of `a` and `b` has positive area."""
    return (a.left < b.right and b.left < a.right
            and a.bottom < b.top and b.bottom < a.top)


def is_feasible(p: Packing) -> bool:
    """
    True iff every placed rectangle lies inside the container and no two
    rectangles overlap with positive area.
    """
    container = p.instance.container
    if not all(inside_container(r, container) for r in p.rects):
        return False
    return not any(overlaps(a, b) for a, b in combinations(p.rects, 2))


def fits_at(p: Packing, dims: Dims, x: Fraction, y: Fraction,
            exclude: Optional[int] = None) -> bool:
    """
    Whether a box of `dims` (already effective) at (x, y) lies inside the
    container and overlaps no placed rectangle other than `exclude`.
    """
    right, top = x + dims.w, y + dims.h
    container = p.instance.container
    if x < 0 or y < 0 or right > container.w or top > container.h:
        return False
    for r in p.rects:
        if r.id == exclude:
            continue
        if x < r.right and r.left < right and y < r.top and r.bottom < top:
            return False
    return True


def scale_instance(instance: Instance, factor: ScalarLike) -> Instance:
    """Multiply every dimension of the instance by a positive rational."""
    k = to_scalar(factor)
    container = Dims(instance.container.w * k, instance.container.h * k)
    return Instance(container, tuple((rid, Dims(d.w * k, d.h * k)) for rid, d in instance.rects))


def scale_packing(p: Packing, factor: ScalarLike) -> Packing:
    """Scale a packing and its instance by the same positive rational."""
    k = to_scalar(factor)
    instance = scale_instance(p.instance, k)
    return Packing.from_placements(instance, {
        r.id: Placement(r.left * k, r.bottom * k, r.placement.v) for r in p.rects})


def area_sorted_ids(instance: Instance, ids: Optional[Sequence[int]] = None) -> List[int]:
    """Ids ordered by decreasing area, ties broken by increasing id."""
    chosen = instance.ids if ids is None else list(ids)
    return sorted(chosen, key=lambda rid: (-instance.dims_of(rid).area, rid))
