"""
SVG rendering of packings.

The drawing's viewBox is the container itself, with y flipped so the origin
sits at the bottom-left as in the packing's coordinates. Output depends only
on the packing (and optional corner marks), never on time or randomness.
"""

import logging
from fractions import Fraction
from typing import Iterable, Optional

import svgwrite

from ..packing.corners import Corner
from ..packing.geometry import Packing

# Set up logging
logger = logging.getLogger(__name__)

PALETTE = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
           "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"]


def _num(q: Fraction) -> float:
    # svg attributes are plain decimals; geometry stays exact elsewhere
    return round(float(q), 6)


def render_svg(packing: Packing, corners: Optional[Iterable[Corner]] = None,
               pixels_per_unit: int = 40) -> str:
    """
    Render a packing as an SVG 1.1 document.

    Args:
        packing: The packing to draw
        corners: Optional corners to mark with small circles
        pixels_per_unit: Display scale for the width/height attributes

    Returns:
        The SVG document as a string
    """
    container = packing.instance.container
    width, height = _num(container.w), _num(container.h)
    stroke = max(width, height) / 200
    font_size = max(min(width, height) / 12, stroke * 4)

    dwg = svgwrite.Drawing(
        size=(f"{width * pixels_per_unit}px", f"{height * pixels_per_unit}px"),
        profile="full",
    )
    dwg.viewbox(0, 0, width, height)
    dwg.add(dwg.rect(insert=(0, 0), size=(width, height), fill="white",
                     stroke="black", stroke_width=stroke * 2, id="container"))

    for index, r in enumerate(packing.rects):
        x, w = _num(r.left), _num(r.right - r.left)
        h = _num(r.top - r.bottom)
        y = _num(container.h - r.top)
        group = dwg.g(id=f"rect-{r.id}")
        group.add(dwg.rect(insert=(x, y), size=(w, h), fill=PALETTE[index % len(PALETTE)],
                           stroke="black", stroke_width=stroke))
        group.add(dwg.text(str(r.id), insert=(x + w / 2, y + h / 2), text_anchor="middle",
                           dominant_baseline="central", font_size=font_size,
                           font_family="sans-serif"))
        dwg.add(group)

    for corner in corners or ():
        dwg.add(dwg.circle(center=(_num(corner.x), _num(container.h - corner.y)),
                           r=stroke * 4, fill="red", class_="corner"))

    logger.debug(f"Rendered {len(packing)} rectangles to SVG")
    return dwg.tostring()


def save_svg(packing: Packing, path: str, corners: Optional[Iterable[Corner]] = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(render_svg(packing, corners))
