"""
Progress Tracking Module for the packing solver.

Contains the SearchStage enum, the SearchStats counters merged across
workers, and the SearchProgress dataclass reported to progress callbacks.
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class SearchStage(Enum):
    """Enum representing the stages of an exact search."""
    INITIALIZED = "initialized"
    SEARCHING = "searching"
    COMPLETED = "completed"
    LIMIT_REACHED = "limit_reached"
    FAILED = "failed"


@dataclass
class SearchStats:
    """
    Counters collected during a search.

    `max_corners_by_depth[k]` is the largest corner list seen at a node with
    k rectangles placed; `bound_violations` lists every node where that count
    exceeded (k+1)^2.
    """
    nodes_expanded: int = 0
    max_corners_by_depth: Dict[int, int] = field(default_factory=dict)
    bound_violations: List[Dict[str, int]] = field(default_factory=list)

    @property
    def max_corner_count(self) -> int:
        return max(self.max_corners_by_depth.values(), default=0)

    def record_corners(self, depth: int, count: int, bound: int) -> None:
        if count > self.max_corners_by_depth.get(depth, -1):
            self.max_corners_by_depth[depth] = count
        if count > bound:
            self.bound_violations.append({"depth": depth, "corners": count, "bound": bound})

    def merge(self, other: "SearchStats") -> "SearchStats":
        """Combine two stats objects. Associative and commutative."""
        depths = set(self.max_corners_by_depth) | set(other.max_corners_by_depth)
        return SearchStats(
            nodes_expanded=self.nodes_expanded + other.nodes_expanded,
            max_corners_by_depth={
                d: max(self.max_corners_by_depth.get(d, 0), other.max_corners_by_depth.get(d, 0))
                for d in sorted(depths)
            },
            bound_violations=self.bound_violations + other.bound_violations,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nodes_expanded": self.nodes_expanded,
            "max_corner_count": self.max_corner_count,
            "max_corners_by_depth": {str(k): v for k, v in sorted(self.max_corners_by_depth.items())},
            "bound_violations": list(self.bound_violations),
        }


@dataclass
class SearchProgress:
    """Class for tracking search progress."""
    stage: SearchStage
    total_branches: int
    finished_branches: int
    nodes_expanded: int
    start_time: float
    last_update_time: float
    message: Optional[str] = None

    @property
    def progress_percentage(self) -> float:
        """Share of root branches fully explored."""
        if self.total_branches == 0:
            return 0.0
        return min(100.0, (self.finished_branches / self.total_branches) * 100.0)

    @property
    def elapsed_time(self) -> float:
        """Calculate the elapsed time in seconds."""
        return time.time() - self.start_time

    def to_dict(self) -> Dict[str, Any]:
        """Convert progress to a dictionary for serialization."""
        return {
            "stage": self.stage.value,
            "total_branches": self.total_branches,
            "finished_branches": self.finished_branches,
            "nodes_expanded": self.nodes_expanded,
            "progress_percentage": self.progress_percentage,
            "elapsed_time": self.elapsed_time,
            "message": self.message,
        }
