"""
Subcommands that decide instances: `solve` (exact search) and `oracle`
(integer-lattice enumeration).
"""

import argparse
import logging

from src.core.io.formats import serialize_packing, serialize_sequence
from src.core.solver.exact_solver import ExactSolver, SolveConfig, VerdictStatus
from src.core.solver.lattice_oracle import oracle_lattice
from src.commands.command_helpers import (
    EXIT_SAT,
    EXIT_UNSAT,
    VERDICT_EXIT_CODES,
    load_instance,
    write_output,
)

logger = logging.getLogger(__name__)


def solve_command(args: argparse.Namespace) -> int:
    """Run the exact solver and emit the packing and sequence on SAT."""
    instance = load_instance(args.instance)
    config = dict(args.config)
    if args.node_limit is not None:
        config["node_limit"] = args.node_limit
    if args.time_limit is not None:
        config["time_limit"] = args.time_limit
    config["deterministic"] = args.deterministic
    cfg = SolveConfig.from_dict(config)

    solver = ExactSolver(config)
    verdict = solver.solve(instance, cfg)
    stats = verdict.stats
    logger.info(f"{verdict.status.value}: {stats.nodes_expanded} nodes, "
                f"max {stats.max_corner_count} corners at a node, {verdict.elapsed:.2f}s")
    if verdict.status is VerdictStatus.SAT:
        write_output(serialize_packing(verdict.packing), args.output)
        if args.seq:
            write_output(serialize_sequence(verdict.sequence), args.seq)
    elif verdict.status is VerdictStatus.UNKNOWN:
        logger.warning(f"search stopped: {verdict.reason}")
    return VERDICT_EXIT_CODES[verdict.status]


def oracle_command(args: argparse.Namespace) -> int:
    """Run the lattice oracle on an integer instance."""
    instance = load_instance(args.instance)
    result = oracle_lattice(instance)
    print(result.status.value)
    if result.is_sat and args.output:
        write_output(serialize_packing(result.packing), args.output)
    return EXIT_SAT if result.is_sat else EXIT_UNSAT


def register(subparsers) -> None:
    solve = subparsers.add_parser("solve", help="decide an instance by exact search")
    solve.add_argument("instance", help="instance JSON file")
    solve.add_argument("--deterministic", action="store_true",
                       help="explore sequentially; identical runs give identical output")
    solve.add_argument("--node-limit", type=int, default=None, help="stop after N nodes")
    solve.add_argument("--time-limit", type=float, default=None, help="stop after S seconds")
    solve.add_argument("-o", "--output", default=None, help="packing file (default: stdout)")
    solve.add_argument("--seq", default=None, help="also write the placement sequence here")
    solve.set_defaults(handler=solve_command)

    oracle = subparsers.add_parser("oracle", help="decide an integer instance by lattice enumeration")
    oracle.add_argument("instance", help="instance JSON file")
    oracle.add_argument("-o", "--output", default=None, help="write the packing found here")
    oracle.set_defaults(handler=oracle_command)
