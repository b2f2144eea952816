"""Toolkit for navigating the {5,4} and {7,3} tilings of the hyperbolic plane.

Tiles are addressed by a sector number and a Fibonacci-basis bit word; all
navigation (neighbors, shortest paths, recentering) runs on the words alone,
in time polynomial in the word length.  An independent Poincare-disk oracle
rebuilds the tilings by reflection closure and cross-checks every symbolic
result.
"""

from hypernav.fibonacci import decode, encode, fib, level_bounds, level_of
from hypernav.navigation import (
    Address,
    GridKind,
    GridMismatchError,
    distance,
    format_address,
    neighbors,
    origin_direction,
    parse_address,
    recenter,
    shortest_path,
)
from hypernav.tree import NodeColor, color_of, parent, path_from_root, preferred_son, sons

__all__ = [
    "Address",
    "GridKind",
    "GridMismatchError",
    "NodeColor",
    "color_of",
    "decode",
    "distance",
    "encode",
    "fib",
    "format_address",
    "level_bounds",
    "level_of",
    "neighbors",
    "origin_direction",
    "parent",
    "parse_address",
    "path_from_root",
    "preferred_son",
    "recenter",
    "shortest_path",
    "sons",
]
