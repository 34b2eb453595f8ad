"""
Greedy Baseline Module for the packing toolkit.

The classic Bottom-Left heuristic: take rectangles in a fixed order and put
each one at its lowest possible position, left-justified. No backtracking.
The first corner returned by enumerate_corners is exactly that position.

greedy_exhaustive tries the heuristic under every ordering and orientation
choice, which is how an instance is shown to defeat the heuristic outright.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from ..packing.corners import enumerate_corners
from ..packing.geometry import Instance, Orientation, Packing, Placement, area_sorted_ids
from .exact_solver import SolveConfig, VerdictStatus, solve_exact

# Set up logging
logger = logging.getLogger(__name__)

OrientationChoice = Union[Mapping[int, Orientation], Sequence[Orientation], None]


@dataclass(frozen=True)
class GreedyResult:
    """Outcome of one greedy run. On failure `packing` holds what was placed before `failed_id`."""
    packing: Packing
    failed_id: Optional[int] = None

    @property
    def success(self) -> bool:
        return self.failed_id is None


def _orientation_map(order: Sequence[int], orientations: OrientationChoice) -> Dict[int, Orientation]:
    if orientations is None:
        return {rid: Orientation.HORIZONTAL for rid in order}
    if isinstance(orientations, Mapping):
        return {rid: orientations.get(rid, Orientation.HORIZONTAL) for rid in order}
    flags = list(orientations)
    if len(flags) != len(order):
        raise ValueError(f"expected {len(order)} orientation flags, got {len(flags)}")
    return dict(zip(order, flags))


def solve_greedy(instance: Instance, order: Sequence[int],
                 orientations: OrientationChoice = None) -> GreedyResult:
    """
    Run the Bottom-Left heuristic.

    Args:
        instance: The instance to pack
        order: A permutation of the instance's ids
        orientations: Per-rectangle orientation, as a mapping id -> flag or a
            sequence aligned with `order`; horizontal when omitted

    Returns:
        A GreedyResult; on success the packing is feasible and bottom-left stable

    Raises:
        ValueError: If `order` is not a permutation of the instance's ids
    """
    order = list(order)
    if sorted(order) != sorted(instance.ids):
        raise ValueError(f"order {order} is not a permutation of ids {instance.ids}")
    flags = _orientation_map(order, orientations)
    packing = Packing.empty(instance)
    for rid in order:
        corners = enumerate_corners(packing, instance.dims_of(rid), flags[rid])
        if not corners:
            logger.debug(f"Greedy run stops: no corner for rectangle {rid}")
            return GreedyResult(packing, failed_id=rid)
        head = corners[0]
        packing = packing.place(rid, Placement(head.x, head.y, flags[rid]))
    return GreedyResult(packing)


def _state_key(instance: Instance, packing: Packing) -> frozenset:
    # rectangles with equal dims are interchangeable
    return frozenset(
        (instance.dims_of(r.id).w, instance.dims_of(r.id).h, r.left, r.bottom, r.placement.v)
        for r in packing.rects)


def greedy_exhaustive(instance: Instance) -> Optional[Tuple[List[int], Dict[int, Orientation]]]:
    """
    Try the Bottom-Left heuristic under every ordering and orientation choice.

    Runs sharing a prefix share its work, identical rectangles are
    interchangeable, and squares are tried in one orientation.

    Returns:
        The first (order, orientations) for which solve_greedy succeeds, or None
    """
    failed: Set[frozenset] = set()

    def search(packing: Packing, remaining: Tuple[int, ...],
               prefix: List[Tuple[int, Orientation]]):
        if not remaining:
            return prefix
        key = _state_key(instance, packing)
        if key in failed:
            return None
        seen = set()
        for rid in remaining:
            dims = instance.dims_of(rid)
            if (dims.w, dims.h) in seen:
                continue
            seen.add((dims.w, dims.h))
            orientations = (Orientation.HORIZONTAL,) if dims.is_square else (
                Orientation.HORIZONTAL, Orientation.VERTICAL)
            for v in orientations:
                corners = enumerate_corners(packing, dims, v)
                if not corners:
                    continue
                child = packing.place(rid, Placement(corners[0].x, corners[0].y, v))
                rest = tuple(r for r in remaining if r != rid)
                found = search(child, rest, prefix + [(rid, v)])
                if found is not None:
                    return found
        failed.add(key)
        return None

    found = search(Packing.empty(instance), tuple(area_sorted_ids(instance)), [])
    if found is None:
        return None
    return [rid for rid, _ in found], {rid: v for rid, v in found}


def find_greedy_gap(instances: Iterable[Instance],
                    cfg: Optional[SolveConfig] = None) -> Optional[Instance]:
    """
    Return the first instance that is feasible but that the Bottom-Left
    heuristic cannot solve under any ordering or orientation choice.
    """
    checked = 0
    for instance in instances:
        checked += 1
        if greedy_exhaustive(instance) is not None:
            continue
        verdict = solve_exact(instance, cfg)
        if verdict.status is VerdictStatus.SAT:
            logger.info(f"Greedy gap found after {checked} instances: {instance}")
            return instance
    logger.info(f"No greedy gap among {checked} instances")
    return None
