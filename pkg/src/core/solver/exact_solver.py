"""
Exact Solver Module for the packing toolkit.

This module provides the ExactSolver class, a complete decision procedure
for the rectangle packing problem. It runs a depth-first search over
bottom-left placement actions: at every node it branches over the next
rectangle, its orientation, and each bottom-left corner available to it.
Any feasible instance has a packing reachable this way, so exhausting the
search proves infeasibility.
"""

import logging
import math
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..packing.corners import corner_bound, enumerate_corners
from ..packing.errors import InvalidInstanceError
from ..packing.geometry import Instance, Orientation, Packing, Placement, area_sorted_ids
from ..packing.sequencing import PlacementAction, PlacementSequence, replay
from .progress import SearchProgress, SearchStage, SearchStats

# Set up logging
logger = logging.getLogger(__name__)

# Thread count for parallel root exploration when none is configured
DEFAULT_WORKERS = 4


def theorem_node_bound(n: int) -> int:
    """n! * 2^n * prod_{k<n} (k+1)^2: the finite bound on bottom-left placement actions."""
    return math.factorial(n) * 2 ** n * math.prod(corner_bound(k) for k in range(n))


class VerdictStatus(Enum):
    SAT = "sat"
    UNSAT = "unsat"
    UNKNOWN = "unknown"


@dataclass
class SolveConfig:
    """
    Search settings.

    Limits of None mean unlimited. With `deterministic` unset, root branches
    are explored by up to `workers` threads.
    """
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    deterministic: bool = True
    area_prune: bool = True
    duplicate_prune: bool = True
    workers: int = DEFAULT_WORKERS

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")

    @classmethod
    def from_dict(cls, config: Optional[Dict[str, Any]] = None) -> "SolveConfig":
        """Build a SolveConfig from a loose configuration dictionary (see src.utils.config)."""
        config = config or {}
        return cls(
            node_limit=config.get("node_limit"),
            time_limit=config.get("time_limit"),
            deterministic=bool(config.get("deterministic", True)),
            area_prune=bool(config.get("area_prune", True)),
            duplicate_prune=bool(config.get("duplicate_prune", True)),
            workers=int(config.get("workers") or DEFAULT_WORKERS),
        )


@dataclass
class Verdict:
    """Outcome of a search. SAT carries a packing and the sequence that replays to it."""
    status: VerdictStatus
    packing: Optional[Packing] = None
    sequence: Optional[PlacementSequence] = None
    reason: Optional[str] = None
    stats: SearchStats = field(default_factory=SearchStats)
    elapsed: float = 0.0

    @property
    def is_sat(self) -> bool:
        return self.status is VerdictStatus.SAT

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "reason": self.reason,
            "elapsed": self.elapsed,
            "stats": self.stats.to_dict(),
        }


class _LimitReached(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class _Cancelled(Exception):
    pass


class _SearchBudget:
    """Node and time limits shared by every worker of one search."""

    def __init__(self, node_limit: Optional[int], time_limit: Optional[float]):
        self.node_limit = node_limit
        self.deadline = time.monotonic() + time_limit if time_limit is not None else None
        self.nodes = 0
        self.lock = threading.Lock()
        self.cancel = threading.Event()

    def charge(self) -> None:
        if self.cancel.is_set():
            raise _Cancelled()
        with self.lock:
            self.nodes += 1
            nodes = self.nodes
        if self.node_limit is not None and nodes > self.node_limit:
            raise _LimitReached(f"node limit {self.node_limit} reached")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _LimitReached("time limit reached")


class _BranchSearch:
    """Private depth-first search state for one worker."""

    def __init__(self, instance: Instance, cfg: SolveConfig, budget: _SearchBudget):
        self.instance = instance
        self.cfg = cfg
        self.budget = budget
        self.stats = SearchStats()
        self.container_area = instance.container.area

    def branches(self, packing: Packing, remaining: Tuple[int, ...]):
        """Yield (rect id, orientation, corner) children of a node in branch order."""
        depth = len(packing)
        seen = set()
        for rid in remaining:
            dims = self.instance.dims_of(rid)
            if self.cfg.duplicate_prune:
                key = (dims.w, dims.h)
                if key in seen:
                    continue
                seen.add(key)
            if dims.is_square and self.cfg.duplicate_prune:
                orientations = (Orientation.HORIZONTAL,)
            else:
                orientations = (Orientation.HORIZONTAL, Orientation.VERTICAL)
            for v in orientations:
                corners = enumerate_corners(packing, dims, v)
                self.stats.record_corners(depth, len(corners), corner_bound(depth))
                for corner in corners:
                    yield rid, v, corner

    def expand(self, packing: Packing, remaining: Tuple[int, ...],
               remaining_area: Fraction) -> bool:
        """Charge the budget for a node and decide whether it can be pruned."""
        self.budget.charge()
        self.stats.nodes_expanded += 1
        if self.cfg.area_prune:
            free = self.container_area - (self.instance.total_area - remaining_area)
            if remaining_area > free:
                return False
        return True

    def search(self, packing: Packing, remaining: Tuple[int, ...],
               remaining_area: Fraction) -> Optional[List[PlacementAction]]:
        if not remaining:
            return []
        if not self.expand(packing, remaining, remaining_area):
            return None
        for rid, v, corner in self.branches(packing, remaining):
            found = self.descend(packing, remaining, remaining_area, rid, v, corner)
            if found is not None:
                return found
        return None

    def descend(self, packing, remaining, remaining_area, rid, v, corner):
        child = packing.place(rid, Placement(corner.x, corner.y, v))
        rest = tuple(r for r in remaining if r != rid)
        found = self.search(child, rest, remaining_area - self.instance.dims_of(rid).area)
        if found is None:
            return None
        return [PlacementAction(rid, v, corner.x, corner.y)] + found


class ExactSolver:
    """
    A class for deciding rectangle packing instances exactly.

    The search branches on bottom-left placement actions only, with three
    solution-preserving prunings: identical remaining rectangles are tried
    once, squares are tried in one orientation, and nodes whose remaining
    area exceeds the free area are cut.
    """

    def __init__(self, solver_config: Optional[Dict[str, Any]] = None):
        """
        Initialize the ExactSolver with optional configuration.

        Args:
            solver_config: Optional configuration dictionary (copied, never modified)
                - node_limit, time_limit: resource limits (None = unlimited)
                - deterministic: explore sequentially
                - workers: thread count for parallel root exploration
                  (DEFAULT_WORKERS when missing or None)
        """
        self.config = dict(solver_config or {})
        self.last_error = None
        self.progress_lock = threading.Lock()
        self.progress_callback = None
        self.progress = self._fresh_progress(time.time())

    @staticmethod
    def _fresh_progress(start: float) -> SearchProgress:
        return SearchProgress(stage=SearchStage.INITIALIZED, total_branches=0,
                              finished_branches=0, nodes_expanded=0,
                              start_time=start, last_update_time=start)

    def set_progress_callback(self, callback: Callable[[Dict[str, Any]], None]) -> None:
        """
        Set a function called with a progress dictionary whenever a root
        branch finishes.
        """
        self.progress_callback = callback

    def _update_progress(self, stage: Optional[SearchStage] = None,
                         finished_branch: bool = False, nodes: Optional[int] = None,
                         message: Optional[str] = None,
                         total_branches: Optional[int] = None) -> None:
        with self.progress_lock:
            if total_branches is not None:
                self.progress.total_branches = total_branches
            if stage is not None:
                self.progress.stage = stage
            if finished_branch:
                self.progress.finished_branches += 1
            if nodes is not None:
                self.progress.nodes_expanded = nodes
            if message is not None:
                self.progress.message = message
            self.progress.last_update_time = time.time()
            if self.progress_callback:
                self.progress_callback(self.progress.to_dict())

    def solve(self, instance: Instance, cfg: Optional[SolveConfig] = None) -> Verdict:
        """
        Decide whether all rectangles of `instance` fit into its container.

        Args:
            instance: The instance to decide
            cfg: Search settings; defaults come from this solver's configuration

        Returns:
            SAT with a replay-checked packing, UNSAT after full exhaustion,
            or UNKNOWN when a resource limit stopped the search

        Raises:
            InvalidInstanceError: If `instance` is not an Instance
            Exception: Whatever a search worker raised; last_error and the
                FAILED stage record it first
        """
        if not isinstance(instance, Instance):
            raise InvalidInstanceError("solve_exact needs an Instance")
        cfg = cfg or SolveConfig.from_dict(self.config)
        self.last_error = None
        start = time.time()
        with self.progress_lock:
            self.progress = self._fresh_progress(start)
        budget = _SearchBudget(cfg.node_limit, cfg.time_limit)
        order = tuple(area_sorted_ids(instance))
        logger.info(f"Starting exact search: {instance.n} rectangles in "
                    f"{instance.container}, deterministic={cfg.deterministic}")

        root = _BranchSearch(instance, cfg, budget)
        empty = Packing.empty(instance)
        actions: Optional[List[PlacementAction]] = None
        limit_reason: Optional[str] = None
        stats = SearchStats()
        try:
            if not order:
                actions = []
            elif root.expand(empty, order, instance.total_area):
                children = list(root.branches(empty, order))
                self._update_progress(stage=SearchStage.SEARCHING, total_branches=len(children))
                if cfg.deterministic or cfg.workers == 1 or len(children) <= 1:
                    actions, limit_reason, stats = self._run_sequential(
                        instance, cfg, budget, root, empty, order, children)
                else:
                    actions, limit_reason, stats = self._run_parallel(
                        instance, cfg, budget, empty, order, children)
        except _LimitReached as e:
            limit_reason = e.reason
        except Exception as e:
            self.last_error = f"search failed: {e}"
            logger.error(f"Exact search failed: {e}", exc_info=True)
            self._update_progress(stage=SearchStage.FAILED, message=self.last_error)
            raise
        stats = root.stats.merge(stats)
        elapsed = time.time() - start

        if actions is not None:
            sequence = PlacementSequence(instance, tuple(actions))
            packing = replay(instance, sequence)
            verdict = Verdict(VerdictStatus.SAT, packing, sequence, stats=stats, elapsed=elapsed)
            self._update_progress(stage=SearchStage.COMPLETED, nodes=stats.nodes_expanded)
        elif limit_reason is not None:
            self.last_error = limit_reason
            verdict = Verdict(VerdictStatus.UNKNOWN, reason=limit_reason, stats=stats, elapsed=elapsed)
            self._update_progress(stage=SearchStage.LIMIT_REACHED, nodes=stats.nodes_expanded,
                                  message=limit_reason)
        else:
            verdict = Verdict(VerdictStatus.UNSAT, stats=stats, elapsed=elapsed)
            self._update_progress(stage=SearchStage.COMPLETED, nodes=stats.nodes_expanded)
        logger.info(f"Exact search finished: {verdict.status.value} after "
                    f"{stats.nodes_expanded} nodes in {elapsed:.2f}s")
        return verdict

    def _run_sequential(self, instance, cfg, budget, root, empty, order, children):
        area = instance.total_area
        try:
            for rid, v, corner in children:
                found = root.descend(empty, order, area, rid, v, corner)
                self._update_progress(finished_branch=True, nodes=root.stats.nodes_expanded)
                if found is not None:
                    return found, None, SearchStats()
        except _LimitReached as e:
            return None, e.reason, SearchStats()
        return None, None, SearchStats()

    def _run_parallel(self, instance, cfg, budget, empty, order, children):
        area = instance.total_area
        actions: Optional[List[PlacementAction]] = None
        limit_reason: Optional[str] = None
        merged = SearchStats()

        def run_branch(rid, v, corner):
            worker = _BranchSearch(instance, cfg, budget)
            try:
                return worker.descend(empty, order, area, rid, v, corner), None, worker.stats
            except _LimitReached as e:
                return None, e.reason, worker.stats
            except _Cancelled:
                return None, None, worker.stats

        logger.info(f"Exploring {len(children)} root branches with up to {cfg.workers} workers")
        with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            futures = [executor.submit(run_branch, rid, v, corner) for rid, v, corner in children]
            for future in as_completed(futures):
                try:
                    found, reason, stats = future.result()
                except Exception:
                    # stop the other workers; solve() records the failure
                    budget.cancel.set()
                    raise
                merged = merged.merge(stats)
                self._update_progress(finished_branch=True, nodes=budget.nodes)
                if found is not None and actions is None:
                    actions = found
                    budget.cancel.set()
                elif reason is not None and limit_reason is None:
                    limit_reason = reason
        if actions is not None:
            return actions, None, merged
        return None, limit_reason, merged


def solve_exact(instance: Instance, cfg: Optional[SolveConfig] = None) -> Verdict:
    """Decide `instance` with a fresh ExactSolver. See ExactSolver.solve."""
    return ExactSolver().solve(instance, cfg or SolveConfig())
