"""
Subcommands that inspect packings: `verify`, `replay`, `stabilize`,
`order` and `corners`.
"""

import argparse
import json
import logging

from src.core.io.formats import (
    parse_sequence,
    serialize_packing,
    serialize_sequence,
)
from src.core.packing.corners import enumerate_corners
from src.core.packing.geometry import Orientation, is_feasible, total_coordinate
from src.core.packing.relations import is_bl_stable
from src.core.packing.sequencing import extraction_order, replay, stabilize
from src.core.packing.utils import format_scalar
from src.commands.command_helpers import (
    EXIT_FAILED,
    EXIT_OK,
    load_instance,
    load_instance_and_packing,
    parse_dims_arg,
    read_text,
    require_feasible,
    write_output,
)

logger = logging.getLogger(__name__)


def verify_command(args: argparse.Namespace) -> int:
    """Check feasibility (and bottom-left stability with --stable)."""
    _, packing = load_instance_and_packing(args.instance, args.packing)
    if not packing.is_complete:
        logger.warning(f"packing places {len(packing)} of {packing.instance.n} rectangles")
    if not is_feasible(packing):
        print("infeasible")
        return EXIT_FAILED
    if args.stable and not is_bl_stable(packing):
        print("feasible, not bottom-left stable")
        return EXIT_FAILED
    print("feasible, bottom-left stable" if args.stable else "feasible")
    return EXIT_OK


def replay_command(args: argparse.Namespace) -> int:
    """Check a placement sequence; replay errors exit with the input-error code."""
    instance = load_instance(args.instance)
    sequence = parse_sequence(read_text(args.sequence), instance)
    packing = replay(instance, sequence)
    print(f"replay ok: {len(packing)} of {instance.n} rectangles placed")
    if args.output:
        write_output(serialize_packing(packing), args.output)
    return EXIT_OK


def stabilize_command(args: argparse.Namespace) -> int:
    _, packing = load_instance_and_packing(args.instance, args.packing)
    stable, sequence = stabilize(packing)
    logger.info(f"coordinate sum {format_scalar(total_coordinate(packing))} -> "
                f"{format_scalar(total_coordinate(stable))}")
    write_output(serialize_packing(stable), args.output)
    if args.seq:
        write_output(serialize_sequence(sequence), args.seq)
    return EXIT_OK


def order_command(args: argparse.Namespace) -> int:
    """Print the extraction order and its reverse, the placement sequence."""
    _, packing = load_instance_and_packing(args.instance, args.packing)
    removal = extraction_order(packing)
    _, sequence = stabilize(packing)
    print(json.dumps({"extraction-order": removal,
                      "placement-order": list(reversed(removal))}, sort_keys=True))
    if args.seq:
        write_output(serialize_sequence(sequence), args.seq)
    return EXIT_OK


def corners_command(args: argparse.Namespace) -> int:
    _, packing = load_instance_and_packing(args.instance, args.packing)
    require_feasible(packing)
    dims = parse_dims_arg(args.dims)
    corners = enumerate_corners(packing, dims, Orientation(args.orientation))
    for corner in corners:
        print(corner.describe())
    logger.info(f"{len(corners)} corners for {dims} ({args.orientation}) "
                f"with {len(packing)} rectangles placed")
    return EXIT_OK


def register(subparsers) -> None:
    verify = subparsers.add_parser("verify", help="check that a packing is feasible")
    verify.add_argument("instance")
    verify.add_argument("packing")
    verify.add_argument("--stable", action="store_true", help="also require bottom-left stability")
    verify.set_defaults(handler=verify_command)

    replay_p = subparsers.add_parser("replay", help="check a placement sequence certificate")
    replay_p.add_argument("instance")
    replay_p.add_argument("sequence")
    replay_p.add_argument("-o", "--output", default=None, help="write the replayed packing here")
    replay_p.set_defaults(handler=replay_command)

    stab = subparsers.add_parser("stabilize", help="make a feasible packing bottom-left stable")
    stab.add_argument("instance")
    stab.add_argument("packing")
    stab.add_argument("-o", "--output", default=None, help="packing file (default: stdout)")
    stab.add_argument("--seq", default=None, help="also write the placement sequence here")
    stab.set_defaults(handler=stabilize_command)

    order = subparsers.add_parser("order", help="print the extraction order of a packing")
    order.add_argument("instance")
    order.add_argument("packing")
    order.add_argument("--seq", default=None, help="write the placement sequence here")
    order.set_defaults(handler=order_command)

    corners = subparsers.add_parser("corners", help="list bottom-left corners for a rectangle")
    corners.add_argument("instance")
    corners.add_argument("packing")
    corners.add_argument("--dims", required=True, help="rectangle size as WxH")
    corners.add_argument("--orientation", choices=["h", "v"], default="h")
    corners.set_defaults(handler=corners_command)
