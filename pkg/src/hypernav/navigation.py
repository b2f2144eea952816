"""Symbolic navigation in the {5,4} and {7,3} tilings.

A tile is the central one or a pair (sector, word): the word places the tile
in the tree spanning the sector, and level l of a tree is ring l+1 around
the center.  Within one ring, tiles in word order run counterclockwise, so
ring-mates are reached by adding or subtracting one (wrapping into the next
sector at level boundaries).  Every operation here manipulates words only;
running time is polynomial in the word length and independent of how many
tiles the relevant ball holds.

Neighbor layout, counterclockwise from edge 0 (the edge toward the father).
Outward neighbors appear in ring order as the edge index grows; the two
inward edges of a black tile are adjacent (the tile hangs at their shared
vertex) and appear ring-reversed:

  {5,4} white:  father | 1st son | 2nd son | 3rd son | next branch
  {5,4} black:  father | father's cw mate | 1st son | 2nd son | next branch
  {7,3} white:  father | cw mate | sons 1-3 | next branch | ccw mate
  {7,3} black:  father | father's cw mate | cw mate | sons 1-2 | next branch | ccw mate

"next branch" is the one upper neighbor that is not a son: the leftmost son
of the tile's counterclockwise ring-mate.  These tables are frozen from the
reflection-closure oracle; the oracle tests keep them honest.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from hypernav.fibonacci import (
    decode,
    fib,
    is_level_max,
    is_level_min,
    level_max_word,
    level_min_word,
    predecessor,
    successor,
    validate_word,
    word_level,
)
from hypernav.geometry import (
    DiskIsometry,
    TilePatch,
    apply_patch,
    base_polygon,
    compose,
    invert,
    reflect,
)
from hypernav.tree import NodeColor, color_of, son_by_rank
from hypernav.tree import parent as tree_parent
from hypernav.tree import path_from_root as tree_path

__all__ = [
    "Address",
    "GridKind",
    "GridMismatchError",
    "ball_size",
    "distance",
    "edge_angle",
    "enumerate_ball",
    "format_address",
    "frame_ball",
    "frame_transport",
    "from_frame",
    "layout_ball",
    "layout_patch",
    "neighbors",
    "origin_direction",
    "parse_address",
    "pose_of",
    "recenter",
    "ring_of",
    "ring_size",
    "shortest_path",
]


class GridKind(Enum):
    PENTAGRID = ("P5", 5, 4)
    HEPTAGRID = ("H7", 7, 3)

    def __init__(self, tag: str, p: int, q: int):
        self.tag = tag
        self.p = p
        self.q = q

    @classmethod
    def from_tag(cls, text: str) -> GridKind:
        key = text.strip().upper()
        for kind in cls:
            if key in (kind.tag, kind.name):
                return kind
        raise ValueError(f"unknown grid {text!r} (expected P5 or H7)")


class GridMismatchError(ValueError):
    """Raised when two addresses from different grids are combined."""


@dataclass(frozen=True)
class Address:
    grid: GridKind
    sector: int | None = None
    word: str | None = None

    def __post_init__(self) -> None:
        if (self.sector is None) != (self.word is None):
            raise ValueError("sector and word must be given together")
        if self.sector is not None:
            if not 1 <= self.sector <= self.grid.p:
                raise ValueError(f"sector {self.sector} out of range for {self.grid.tag}")
            validate_word(self.word)

    @classmethod
    def center(cls, grid: GridKind) -> Address:
        return cls(grid)

    @classmethod
    def node(cls, grid: GridKind, sector: int, word: str) -> Address:
        return cls(grid, sector, word)

    @property
    def is_center(self) -> bool:
        return self.sector is None

    def __str__(self) -> str:
        return format_address(self)

    def sort_key(self) -> tuple:
        if self.is_center:
            return (0, 0, 0, "")
        return (1, self.sector, len(self.word), self.word)


def format_address(a: Address) -> str:
    if a.is_center:
        return f"{a.grid.tag}:C"
    return f"{a.grid.tag}:{a.sector}:{a.word}"


def parse_address(text: str) -> Address:
    parts = text.strip().split(":")
    if len(parts) < 2:
        raise ValueError(f"malformed address {text!r}")
    grid = GridKind.from_tag(parts[0])
    if len(parts) == 2 and parts[1].upper() == "C":
        return Address.center(grid)
    if len(parts) != 3:
        raise ValueError(f"malformed address {text!r}")
    try:
        sector = int(parts[1])
    except ValueError:
        raise ValueError(f"sector {parts[1]!r} is not a number") from None
    return Address.node(grid, sector, parts[2])


def _require_same_grid(a: Address, b: Address) -> None:
    if a.grid is not b.grid:
        raise GridMismatchError(f"addresses {a} and {b} live on different grids")


def ring_of(a: Address) -> int:
    """Graph distance from the central tile (tree level + 1)."""
    return 0 if a.is_center else word_level(a.word) + 1


def ring_size(grid: GridKind, n: int) -> int:
    """Number of tiles at graph distance n from the center."""
    if n < 0:
        raise ValueError("ring index must be >= 0")
    return 1 if n == 0 else grid.p * fib(2 * n - 1)


def ball_size(grid: GridKind, radius: int) -> int:
    return sum(ring_size(grid, n) for n in range(radius + 1))


# ---------------------------------------------------------------------------
# ring-mates and tree relatives, with sector wrap-around


def _inc_node(a: Address) -> Address:
    """Counterclockwise ring-mate (next word, wrapping into the next sector)."""
    if is_level_max(a.word):
        sector = a.sector % a.grid.p + 1
        return Address(a.grid, sector, level_min_word(word_level(a.word)))
    return Address(a.grid, a.sector, successor(a.word))


def _dec_node(a: Address) -> Address:
    """Clockwise ring-mate."""
    if is_level_min(a.word):
        sector = (a.sector - 2) % a.grid.p + 1
        return Address(a.grid, sector, level_max_word(word_level(a.word)))
    return Address(a.grid, a.sector, predecessor(a.word))


def _father(a: Address) -> Address:
    if len(a.word) == 1:
        return Address.center(a.grid)
    return Address(a.grid, a.sector, tree_parent(a.word)[0])


def _first_son(a: Address) -> Address:
    w00 = a.word + "00"
    if color_of(a.word) is NodeColor.BLACK:
        return Address(a.grid, a.sector, w00)
    return Address(a.grid, a.sector, predecessor(w00))


def _next_branch(a: Address) -> Address:
    """The upper neighbor that is not a son: leftmost son of the ccw ring-mate."""
    return _inc_node(Address(a.grid, a.sector, a.word + "01"))


def neighbors(a: Address) -> list[Address]:
    """The p adjacent tiles, indexed by edge (edge 0 faces the father)."""
    grid = a.grid
    if a.is_center:
        return [Address(grid, s, "1") for s in range(1, grid.p + 1)]
    word = a.word
    sector = a.sector
    color = color_of(word)
    father = _father(a)
    son00 = Address(grid, sector, word + "00")
    son01 = Address(grid, sector, word + "01")
    branch = _next_branch(a)
    if grid is GridKind.PENTAGRID:
        if color is NodeColor.WHITE:
            return [father, _first_son(a), son00, son01, branch]
        return [father, _dec_node(father), son00, son01, branch]
    if color is NodeColor.WHITE:
        return [father, _dec_node(a), _first_son(a), son00, son01, branch, _inc_node(a)]
    return [father, _dec_node(father), _dec_node(a), son00, son01, branch, _inc_node(a)]


# ---------------------------------------------------------------------------
# distance and shortest paths

# moving one step along a ring costs 1 edge in {7,3} (ring-mates touch) and
# 2 edges in {5,4} (via the shared upper tile)
_LATERAL_COST = {GridKind.PENTAGRID: 2, GridKind.HEPTAGRID: 1}


def _ring_position(a: Address) -> tuple[int, int]:
    """(index along the ring counterclockwise, ring cardinality)."""
    level = word_level(a.word)
    per_sector = fib(2 * level + 1)
    pos = (a.sector - 1) * per_sector + (decode(a.word) - fib(2 * level))
    return pos, a.grid.p * per_sector


def _down_min(a: Address) -> Address:
    """Leftmost tile one ring in: the father, or its cw ring-mate for black tiles."""
    father = _father(a)
    if color_of(a.word) is NodeColor.BLACK:
        return _dec_node(father)
    return father


def _arc_chain(a: Address) -> dict[int, tuple[Address, Address]]:
    """For each ring r <= ring(a), the interval of tiles at distance ring(a) - r.

    The interval is contiguous in ring order and stays a few tiles wide; it
    is exactly the set reachable from ``a`` by inward steps only.
    """
    r = ring_of(a)
    arcs = {r: (a, a)}
    lo = hi = a
    while r > 1:
        lo = _down_min(lo)
        hi = _father(hi)
        r -= 1
        arcs[r] = (lo, hi)
    return arcs


def _gap(arc_a: tuple[Address, Address], arc_b: tuple[Address, Address]) -> int:
    """Cyclic number of ring steps separating two ring intervals (0 if they meet)."""
    pa_lo, n = _ring_position(arc_a[0])
    pa_hi, _ = _ring_position(arc_a[1])
    pb_lo, _ = _ring_position(arc_b[0])
    pb_hi, _ = _ring_position(arc_b[1])
    wa = (pa_hi - pa_lo) % n
    wb = (pb_hi - pb_lo) % n
    if (pb_lo - pa_lo) % n <= wa or (pa_lo - pb_lo) % n <= wb:
        return 0
    return min((pb_lo - pa_hi) % n, (pa_lo - pb_hi) % n)


def distance(a: Address, b: Address) -> int:
    """Graph distance, computed from the words alone."""
    _require_same_grid(a, b)
    if a == b:
        return 0
    ra, rb = ring_of(a), ring_of(b)
    if a.is_center:
        return rb
    if b.is_center:
        return ra
    arcs_a = _arc_chain(a)
    arcs_b = _arc_chain(b)
    unit = _LATERAL_COST[a.grid]
    best = ra + rb  # meeting at the central tile
    for r in range(1, min(ra, rb) + 1):
        vertical = (ra - r) + (rb - r)
        if vertical >= best:
            continue
        best = min(best, vertical + unit * _gap(arcs_a[r], arcs_b[r]))
    return best


def _upper_candidates(a: Address) -> list[Address]:
    """Tiles one ring out that have ``a`` among their inward neighbors."""
    if a.is_center:
        return neighbors(a)
    ups = [Address(a.grid, a.sector, son_by_rank(a.word, r)) for r in
           range(1, 3 if color_of(a.word) is NodeColor.BLACK else 4)]
    ups.append(_next_branch(a))
    return ups


def _in_arc(a: Address, arc: tuple[Address, Address]) -> bool:
    pos, n = _ring_position(a)
    lo, _ = _ring_position(arc[0])
    hi, _ = _ring_position(arc[1])
    return (pos - lo) % n <= (hi - lo) % n


def _climb(start: Address, arcs: dict[int, tuple[Address, Address]], top: Address) -> list[Address]:
    """Walk outward from ``start`` to ``top`` staying inside the arc chain."""
    out = [start]
    current = start
    for r in range(ring_of(start) + 1, ring_of(top) + 1):
        arc = arcs[r]
        for candidate in _upper_candidates(current):
            if _in_arc(candidate, arc):
                current = candidate
                break
        else:  # pragma: no cover - would indicate a broken arc chain
            raise AssertionError("no outward step inside the arc chain")
        out.append(current)
    if current != top:  # pragma: no cover
        raise AssertionError("climb did not reach the endpoint")
    return out


def _address_at(arc_lo: Address, offset: int) -> Address:
    a = arc_lo
    for _ in range(offset):
        a = _inc_node(a)
    return a


def _lateral_walk(t_a: Address, t_b: Address, forward: bool) -> list[Address]:
    """Ring walk from t_a to t_b; in {5,4} each step detours over the shared upper tile."""
    out = [t_a]
    current = t_a
    while current != t_b:
        nxt = _inc_node(current) if forward else _dec_node(current)
        if current.grid is GridKind.PENTAGRID:
            bridge = _next_branch(current) if forward else _first_son(current)
            out.append(bridge)
        out.append(nxt)
        current = nxt
    return out


def shortest_path(a: Address, b: Address) -> list[Address]:
    """One geodesic path from a to b; its length equals distance(a, b)."""
    _require_same_grid(a, b)
    if a == b:
        return [a]
    ra, rb = ring_of(a), ring_of(b)
    center = Address.center(a.grid)
    arcs_a = _arc_chain(a) if not a.is_center else {}
    arcs_b = _arc_chain(b) if not b.is_center else {}
    arcs_a[0] = (center, center)
    arcs_b[0] = (center, center)
    unit = _LATERAL_COST[a.grid]

    best = ra + rb
    meet_r = 0
    for r in range(1, min(ra, rb) + 1):
        vertical = (ra - r) + (rb - r)
        if vertical >= best:
            continue
        cost = vertical + unit * _gap(arcs_a[r], arcs_b[r])
        if cost < best:
            best = cost
            meet_r = r

    if meet_r == 0:
        t_a = t_b = center
        forward = True
    else:
        arc_a, arc_b = arcs_a[meet_r], arcs_b[meet_r]
        pa_lo, n = _ring_position(arc_a[0])
        pa_hi, _ = _ring_position(arc_a[1])
        pb_lo, _ = _ring_position(arc_b[0])
        pb_hi, _ = _ring_position(arc_b[1])
        wa = (pa_hi - pa_lo) % n
        wb = (pb_hi - pb_lo) % n
        if (pb_lo - pa_lo) % n <= wa:  # b's low end lies inside a's arc
            t_a = t_b = _address_at(arc_a[0], (pb_lo - pa_lo) % n)
            forward = True
        elif (pa_lo - pb_lo) % n <= wb:
            t_a = t_b = arc_a[0]
            forward = True
        else:
            ahead = (pb_lo - pa_hi) % n
            behind = (pa_lo - pb_hi) % n
            if ahead <= behind:
                t_a, t_b, forward = arc_a[1], arc_b[0], True
            else:
                t_a, t_b, forward = arc_a[0], arc_b[1], False

    down = _climb(t_a, arcs_a, a) if not a.is_center else [t_a]
    up = _climb(t_b, arcs_b, b) if not b.is_center else [t_b]
    path = list(reversed(down)) + _lateral_walk(t_a, t_b, forward)[1:] + up[1:]
    return path


# ---------------------------------------------------------------------------
# geometric layout: a pose isometry for every address

_SON_EDGE_DELTA = {
    GridKind.PENTAGRID: {NodeColor.WHITE: (1, 2, 3), NodeColor.BLACK: (2, 3)},
    GridKind.HEPTAGRID: {NodeColor.WHITE: (2, 3, 4), NodeColor.BLACK: (3, 4)},
}

_RANK_FROM_DELTA = {
    grid: {color: {delta: rank for rank, delta in enumerate(deltas, start=1)}
           for color, deltas in per_grid.items()}
    for grid, per_grid in _SON_EDGE_DELTA.items()
}


@lru_cache(maxsize=None)
def base_patch(grid: GridKind) -> TilePatch:
    return base_polygon(grid.p, grid.q)


@lru_cache(maxsize=None)
def _edge_step(grid: GridKind, edge: int) -> DiskIsometry:
    """Direct isometry carrying the base tile onto its neighbor across ``edge``.

    It is the reflection across that edge composed with the base symmetry
    swapping edge 0 and ``edge``, so the image tile's edge 0 is the shared
    edge: stepping is pose-coherent.
    """
    patch = base_patch(grid)
    p = grid.p
    v1 = patch.vertices[edge].to_complex()
    v2 = patch.vertices[(edge + 1) % p].to_complex()
    mirror = reflect(v1, v2)
    align = DiskIsometry.axis_reflection(math.pi * (edge + 1) / p)
    return compose(mirror, align)


def _pose_coefficients(a: Address) -> tuple[complex, complex]:
    """Moebius coefficients of the pose, rescaled freely along the way.

    Entries of a distance-d translation grow like e^(d/2), so the product is
    renormalized by its largest entry at every step; only the ratio b/a is
    scale-invariant, which is all the deep consumers (the origin arrow) need.
    """
    step = _edge_step(a.grid, a.sector - 1)
    pa, pb = step.a, step.b
    word = "1"
    for rank in tree_path(a.word):
        delta = _SON_EDGE_DELTA[a.grid][color_of(word)][rank - 1]
        s = _edge_step(a.grid, delta)
        na = pa * s.a + pb * s.b.conjugate()
        nb = pa * s.b + pb * s.a.conjugate()
        scale = max(abs(na), abs(nb))
        pa, pb = na / scale, nb / scale
        word = son_by_rank(word, rank)
    return pa, pb


@lru_cache(maxsize=50000)
def pose_of(a: Address) -> DiskIsometry:
    """Direct isometry mapping the base tile (edge 0 and all) onto the tile of ``a``.

    Exact only at desk depth: beyond a few dozen rings the normalized form
    is numerically meaningless (window geometry is frame-based anyway).
    """
    if a.is_center:
        return DiskIsometry.identity()
    pa, pb = _pose_coefficients(a)
    return DiskIsometry(pa, pb)


def layout_patch(a: Address) -> TilePatch:
    """Tile polygon in the global frame, vertex 0 adjacent to the father edge."""
    return apply_patch(pose_of(a), base_patch(a.grid))


def frame_transport(c: Address) -> DiskIsometry:
    """Isometry carrying the global frame onto the frame centered at ``c``."""
    return invert(pose_of(c))


def edge_angle(grid: GridKind, edge: int) -> float:
    """Direction of the midpoint of ``edge`` from the tile center, canonical pose."""
    return 2.0 * math.pi * (edge + 0.5) / grid.p


def enumerate_ball(grid: GridKind, radius: int) -> list[Address]:
    """All addresses within the given graph distance of the center, in ring order."""
    out = [Address.center(grid)]
    for level in range(radius):
        for sector in range(1, grid.p + 1):
            word = level_min_word(level)
            while True:
                out.append(Address(grid, sector, word))
                if is_level_max(word):
                    break
                word = successor(word)
    return out


def layout_ball(
    grid: GridKind,
    radius: int,
    _son_edges: dict[NodeColor, tuple[int, ...]] | None = None,
) -> dict[Address, TilePatch]:
    """Constructive layout of the ball: patch per address.

    ``_son_edges`` overrides the son placement table (used by negative
    controls in the oracle tests).
    """
    deltas = _son_edges or _SON_EDGE_DELTA[grid]
    base = base_patch(grid)
    out = {Address.center(grid): base}
    stack: list[tuple[Address, DiskIsometry]] = []
    for sector in range(1, grid.p + 1):
        root = Address(grid, sector, "1")
        pose = _edge_step(grid, sector - 1)
        stack.append((root, pose))
    while stack:
        addr, pose = stack.pop()
        out[addr] = apply_patch(pose, base)
        if word_level(addr.word) + 1 < radius:
            color = color_of(addr.word)
            for rank, delta in enumerate(deltas[color], start=1):
                son = Address(grid, addr.sector, son_by_rank(addr.word, rank))
                stack.append((son, compose(pose, _edge_step(grid, delta))))
    return out


# ---------------------------------------------------------------------------
# recentering

def _inward_steps(x: Address, c: Address) -> list[tuple[int, Address]]:
    """(edge, neighbor) pairs of x one ring closer to c."""
    d = distance(x, c)
    return [(i, n) for i, n in enumerate(neighbors(x)) if distance(n, c) == d - 1]


def _father_toward(x: Address, c: Address) -> tuple[int, Address, NodeColor]:
    """Tree father of x in the frame centered at c, with x's frame color.

    A tile with two inward neighbors hangs at their shared vertex; inward
    neighbors appear ring-reversed around the tile, so the father is the
    counterclockwise-earlier of the two adjacent edges.
    """
    downs = _inward_steps(x, c)
    if len(downs) == 1:
        return downs[0][0], downs[0][1], NodeColor.WHITE
    if len(downs) != 2:  # pragma: no cover - contradicts the ring structure
        raise AssertionError(f"{x} has {len(downs)} inward neighbors")
    (i1, n1), (i2, n2) = downs
    p = x.grid.p
    if i2 == i1 + 1:
        return i1, n1, NodeColor.BLACK
    if i1 == 0 and i2 == p - 1:
        return i2, n2, NodeColor.BLACK
    raise AssertionError(f"inward neighbors of {x} not on adjacent edges")  # pragma: no cover


def recenter(a: Address, c: Address) -> Address:
    """Address of tile ``a`` in the system whose central tile is ``c``.

    New sector 1 lies across edge 0 of ``c``; sectors then follow c's edges
    counterclockwise, exactly as around the original center.
    """
    _require_same_grid(a, c)
    if c.is_center:
        return a
    if a == c:
        return Address.center(a.grid)
    # walk inward from a to c, recording each tile's frame father and color
    chain: list[tuple[Address, NodeColor]] = []
    x = a
    while x != c:
        _, father, color = _father_toward(x, c)
        chain.append((x, color))
        x = father
    # replay outward, translating edge offsets into son ranks
    chain.reverse()
    root, _root_color = chain[0]
    sector = neighbors(c).index(root) + 1
    word = "1"
    previous = c
    current = root
    for nxt, color in chain[1:]:
        ns = neighbors(current)
        j_fa = ns.index(previous)
        j_son = ns.index(nxt)
        delta = (j_son - j_fa) % a.grid.p
        rank = _RANK_FROM_DELTA[a.grid][color_of(word)].get(delta)
        if rank is None:  # pragma: no cover - contradicts the frame structure
            raise AssertionError(f"edge offset {delta} is not a son slot")
        word = son_by_rank(word, rank)
        if (color is NodeColor.BLACK) != (color_of(word) is NodeColor.BLACK):  # pragma: no cover
            raise AssertionError("frame color disagrees with word color")
        previous, current = current, nxt
    return Address(a.grid, sector, word)


def from_frame(c: Address, framed: Address) -> Address:
    """Global address of the tile whose address in c's frame is ``framed``."""
    _require_same_grid(c, framed)
    if c.is_center:
        return framed
    if framed.is_center:
        return c
    ranks = tree_path(framed.word)
    current = neighbors(c)[framed.sector - 1]
    j_back = neighbors(current).index(c)
    word = "1"
    for rank in ranks:
        delta = _SON_EDGE_DELTA[c.grid][color_of(word)][rank - 1]
        ns = neighbors(current)
        nxt = ns[(j_back + delta) % c.grid.p]
        j_back = neighbors(nxt).index(current)
        word = son_by_rank(word, rank)
        current = nxt
    return current


def frame_ball(c: Address, radius: int) -> list[tuple[Address, Address]]:
    """(frame address, global address) for every tile within ``radius`` of c."""
    grid = c.grid
    if c.is_center:
        return [(a, a) for a in enumerate_ball(grid, radius)]
    out = [(Address.center(grid), c)]
    if radius == 0:
        return out
    # BFS outward so each tile costs O(p) word operations
    frontier: list[tuple[Address, Address, int]] = []
    for sector in range(1, grid.p + 1):
        tile = neighbors(c)[sector - 1]
        framed = Address(grid, sector, "1")
        out.append((framed, tile))
        frontier.append((framed, tile, neighbors(tile).index(c)))
    for _ in range(radius - 1):
        next_frontier: list[tuple[Address, Address, int]] = []
        for framed, tile, j_back in frontier:
            color = color_of(framed.word)
            ns = neighbors(tile)
            for rank, delta in enumerate(_SON_EDGE_DELTA[grid][color], start=1):
                son_tile = ns[(j_back + delta) % grid.p]
                son_framed = Address(grid, framed.sector, son_by_rank(framed.word, rank))
                out.append((son_framed, son_tile))
                next_frontier.append(
                    (son_framed, son_tile, neighbors(son_tile).index(tile))
                )
        frontier = next_frontier
    return out


def origin_direction(c: Address, sector_shift: int = 0) -> float:
    """Angle, in c's canonical pose, at which the global origin tile lies.

    ``sector_shift`` relabels which edge of c anchors sector 1 (shifting by
    one step rotates the reported angle by 2 pi / p).
    """
    if c.is_center:
        raise ValueError("the origin direction is undefined at the origin itself")
    # the recentering isometry sends the origin to -b/a: scale-invariant,
    # so this stays finite at any depth
    pa, pb = _pose_coefficients(c)
    angle = cmath.phase(-pb / pa) - 2.0 * math.pi * sector_shift / c.grid.p
    return angle % (2.0 * math.pi)
