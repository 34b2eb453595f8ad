"""
Solver Module for the bottom-left placement toolkit.

Exact branch-and-bound search over bottom-left placement actions, the greedy
Bottom-Left baseline, an integer-lattice oracle for verification, and the
generators used to build test corpora.
"""

from .progress import SearchStage, SearchStats, SearchProgress
from .exact_solver import (
    ExactSolver,
    SolveConfig,
    Verdict,
    VerdictStatus,
    solve_exact,
    theorem_node_bound,
)
from .greedy import GreedyResult, solve_greedy, greedy_exhaustive, find_greedy_gap
from .lattice_oracle import OracleResult, oracle_lattice

__all__ = [
    "SearchStage",
    "SearchStats",
    "SearchProgress",
    "ExactSolver",
    "SolveConfig",
    "Verdict",
    "VerdictStatus",
    "solve_exact",
    "theorem_node_bound",
    "GreedyResult",
    "solve_greedy",
    "greedy_exhaustive",
    "find_greedy_gap",
    "OracleResult",
    "oracle_lattice",
]
