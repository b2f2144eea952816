"""SVG rendering of tile windows and the deterministic chooser palette.

Tile edges are drawn as true geodesics: circular arcs orthogonal to the
unit circle (straight segments for diameters).  Output is deterministic:
tiles in ball order, coordinates rounded to six decimals.
"""

from __future__ import annotations

import colorsys
import math

from hypernav.geometry import TilePatch, geodesic_circle
from hypernav.navigation import (
    Address,
    GridKind,
    format_address,
    frame_ball,
    layout_patch,
    ring_of,
)
from hypernav.tree import path_from_root, sons

_MAX_RADIUS = 6


def palette_color(a: Address) -> str:
    """Deterministic chooser color: hue nests along the tree path, darker outward."""
    if a.is_center:
        return "#b3b3b3"
    p = a.grid.p
    lo = (a.sector - 1) / p
    hi = a.sector / p
    word = "1"
    for rank in path_from_root(a.word):
        son_words = sons(word)
        width = (hi - lo) / len(son_words)
        lo = lo + (rank - 1) * width
        hi = lo + width
        word = son_words[rank - 1]
    hue = (lo + hi) / 2
    level = ring_of(a) - 1
    lightness = max(0.30, 0.82 - 0.09 * level)
    r, g, b = colorsys.hls_to_rgb(hue, lightness, 0.65)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def _fmt(x: float) -> str:
    return f"{x + 0.0:.6f}"


def _edge_path(z1: complex, z2: complex) -> str:
    circ = geodesic_circle(z1, z2)
    if circ is None:
        return f"L {_fmt(z2.real)} {_fmt(z2.imag)}"
    c, r = circ
    cross = (z1 - c).real * (z2 - c).imag - (z1 - c).imag * (z2 - c).real
    sweep = 1 if cross > 0 else 0
    return f"A {_fmt(r)} {_fmt(r)} 0 0 {sweep} {_fmt(z2.real)} {_fmt(z2.imag)}"


def patch_path(patch: TilePatch) -> str:
    """SVG path of the tile polygon with geodesic (arc) edges."""
    pts = [v.to_complex() for v in patch.vertices]
    parts = [f"M {_fmt(pts[0].real)} {_fmt(pts[0].imag)}"]
    for i in range(len(pts)):
        parts.append(_edge_path(pts[i], pts[(i + 1) % len(pts)]))
    parts.append("Z")
    return " ".join(parts)


def render_svg(grid: GridKind, center: Address, radius: int, *, fill: bool = True) -> str:
    """SVG document of the ball of ``radius`` around ``center``, drawn in its frame."""
    if center.grid is not grid:
        raise ValueError(f"center {center} does not belong to {grid.tag}")
    if not 0 <= radius <= _MAX_RADIUS:
        raise ValueError(f"radius must be between 0 and {_MAX_RADIUS}")
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.05 -1.05 2.10 2.10" '
        'width="800" height="800">',
        # y axis up: math coordinates go through one mirroring group
        '<g transform="scale(1,-1)">',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="#404040" stroke-width="0.004"/>',
    ]
    for framed, global_address in frame_ball(center, radius):
        patch = layout_patch(framed)
        color = palette_color(global_address) if fill else "none"
        lines.append(
            f'<path d="{patch_path(patch)}" fill="{color}" stroke="#202020" '
            f'stroke-width="0.003"><title>{format_address(global_address)}</title></path>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
