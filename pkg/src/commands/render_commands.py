"""
The `render` subcommand: draw a packing as SVG.
"""

import argparse
import logging

from src.core.io.svg_renderer import render_svg
from src.core.packing.corners import enumerate_corners
from src.core.packing.geometry import Orientation
from src.commands.command_helpers import (
    EXIT_OK,
    load_instance_and_packing,
    parse_dims_arg,
    require_feasible,
    write_output,
)

logger = logging.getLogger(__name__)


def render_command(args: argparse.Namespace) -> int:
    _, packing = load_instance_and_packing(args.instance, args.packing)
    corners = None
    if args.corners:
        require_feasible(packing)
        dims = parse_dims_arg(args.corners)
        corners = enumerate_corners(packing, dims, Orientation(args.orientation))
        logger.info(f"Marking {len(corners)} corners for {dims} ({args.orientation})")
    write_output(render_svg(packing, corners), args.output)
    return EXIT_OK


def register(subparsers) -> None:
    render = subparsers.add_parser("render", help="draw a packing as SVG")
    render.add_argument("instance")
    render.add_argument("packing")
    render.add_argument("-o", "--output", default=None, help="SVG file (default: stdout)")
    render.add_argument("--corners", default=None, metavar="WxH",
                        help="mark the bottom-left corners available to a WxH rectangle")
    render.add_argument("--orientation", choices=["h", "v"], default="h",
                        help="orientation of the --corners rectangle")
    render.set_defaults(handler=render_command)
