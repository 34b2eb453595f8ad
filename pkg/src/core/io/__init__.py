"""
Input/output for the packing toolkit: exact JSON file formats and SVG rendering.
"""

from .formats import (
    parse_instance,
    serialize_instance,
    parse_packing,
    serialize_packing,
    parse_sequence,
    serialize_sequence,
    instance_hash,
)
from .svg_renderer import render_svg, save_svg

__all__ = [
    "parse_instance",
    "serialize_instance",
    "parse_packing",
    "serialize_packing",
    "parse_sequence",
    "serialize_sequence",
    "instance_hash",
    "render_svg",
    "save_svg",
]
