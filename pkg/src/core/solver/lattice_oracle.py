"""
Lattice Oracle Module for the packing toolkit.

Exhaustive feasibility check for integer instances, independent of the
corner machinery. The container is a W x H grid of unit cells. Cells are
visited in row-major order; the first free cell is either left empty
(spending one unit of the instance's slack area) or becomes the
bottom-left cell of some rectangle. Every integer-coordinate packing is
reached this way, and a feasible integer instance always has one.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..packing.errors import NonIntegerInstanceError
from ..packing.geometry import Instance, Orientation, Packing, Placement
from .exact_solver import VerdictStatus

# Set up logging
logger = logging.getLogger(__name__)

FREE, FILLED, EMPTY = 0, 1, 2


@dataclass(frozen=True)
class OracleResult:
    status: VerdictStatus
    packing: Optional[Packing] = None

    @property
    def is_sat(self) -> bool:
        return self.status is VerdictStatus.SAT


def oracle_lattice(instance: Instance) -> OracleResult:
    """
    Decide an integer instance by enumerating lattice positions.

    Returns:
        SAT with an integer-coordinate packing, or UNSAT

    Raises:
        NonIntegerInstanceError: If any dimension is not an integer
    """
    if not instance.is_integral():
        raise NonIntegerInstanceError("the lattice oracle needs integer dimensions")
    width, height = int(instance.container.w), int(instance.container.h)
    slack = width * height - int(instance.total_area)
    if slack < 0:
        return OracleResult(VerdictStatus.UNSAT)

    # identical rectangles form one kind; ids are handed out in order
    kinds: Dict[Tuple[int, int], List[int]] = {}
    for rid, dims in instance.rects:
        kinds.setdefault((int(dims.w), int(dims.h)), []).append(rid)
    kind_list = sorted(kinds.items(), key=lambda kv: (-kv[0][0] * kv[0][1], kv[0]))
    counts = [len(ids) for _, ids in kind_list]
    grid = bytearray(width * height)
    placements: Dict[int, Placement] = {}
    left = [instance.n]

    def region_free(x: int, y: int, w: int, h: int) -> bool:
        if x + w > width or y + h > height:
            return False
        for row in range(y, y + h):
            base = row * width
            if any(grid[base + x:base + x + w]):
                return False
        return True

    def fill(x: int, y: int, w: int, h: int, value: int) -> None:
        for row in range(y, y + h):
            base = row * width
            grid[base + x:base + x + w] = bytes([value]) * w

    def search(pos: int, slack_left: int) -> bool:
        if left[0] == 0:
            return True
        while pos < width * height and grid[pos]:
            pos += 1
        if pos == width * height:
            return False
        y, x = divmod(pos, width)
        for k, ((w, h), ids) in enumerate(kind_list):
            if not counts[k]:
                continue
            shapes = [(w, h, Orientation.HORIZONTAL)]
            if w != h:
                shapes.append((h, w, Orientation.VERTICAL))
            for ew, eh, v in shapes:
                if not region_free(x, y, ew, eh):
                    continue
                rid = ids[len(ids) - counts[k]]
                fill(x, y, ew, eh, FILLED)
                counts[k] -= 1
                left[0] -= 1
                placements[rid] = Placement(x, y, v)
                if search(pos + 1, slack_left):
                    return True
                del placements[rid]
                left[0] += 1
                counts[k] += 1
                fill(x, y, ew, eh, FREE)
        if slack_left > 0:
            grid[pos] = EMPTY
            if search(pos + 1, slack_left - 1):
                return True
            grid[pos] = FREE
        return False

    if search(0, slack):
        packing = Packing.from_placements(instance, placements)
        return OracleResult(VerdictStatus.SAT, packing)
    logger.debug(f"Lattice oracle: {instance.n} rectangles do not fit in {instance.container}")
    return OracleResult(VerdictStatus.UNSAT)
