"""Independent geometric ground truth for the tilings.

The tiling is rebuilt from scratch: starting from the base tile, reflect
every tile in each of its sides until the ball of the requested radius is
closed, deduplicating by center proximity.  Adjacency is read off shared
edges.  Nothing here consults the symbolic navigation code, so agreement
between the two is a real check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from hypernav.geometry import (
    DiskPoint,
    TilePatch,
    hyperbolic_distance,
    reflect,
)
from hypernav.navigation import Address, GridKind, base_patch, format_address, parse_address

_CENTER_TOL = 1e-7
_EDGE_TOL = 1e-7
_BUCKET = 1e-4


class FrontierLimitedError(RuntimeError):
    """A query left the generated ball."""


@dataclass
class OracleTiling:
    grid: GridKind
    radius: int
    tiles: list[TilePatch]
    adjacency: list[set[int]]
    ring: list[int]
    address_of: dict[int, Address] = field(default_factory=dict)

    @property
    def tile_count(self) -> int:
        return len(self.tiles)

    def ring_count(self, n: int) -> int:
        return sum(1 for r in self.ring if r == n)

    def to_json(self) -> str:
        doc = {
            "grid": self.grid.tag,
            "radius": self.radius,
            "tiles": [
                {
                    "center": [t.center.x, t.center.y],
                    "vertices": [[v.x, v.y] for v in t.vertices],
                    "ring": self.ring[i],
                    "address": format_address(self.address_of[i]) if i in self.address_of else None,
                }
                for i, t in enumerate(self.tiles)
            ],
            "adjacency": [sorted(s) for s in self.adjacency],
        }
        return json.dumps(doc, indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> OracleTiling:
        doc = json.loads(text)
        tiles = [
            TilePatch(
                tuple(DiskPoint(x, y) for x, y in entry["vertices"]),
                DiskPoint(*entry["center"]),
            )
            for entry in doc["tiles"]
        ]
        out = cls(
            grid=GridKind.from_tag(doc["grid"]),
            radius=doc["radius"],
            tiles=tiles,
            adjacency=[set(s) for s in doc["adjacency"]],
            ring=[entry["ring"] for entry in doc["tiles"]],
        )
        for i, entry in enumerate(doc["tiles"]):
            if entry["address"]:
                out.address_of[i] = parse_address(entry["address"])
        return out


class _CenterIndex:
    """Spatial hash of tile centers; duplicate = hyperbolic distance < tolerance."""

    def __init__(self) -> None:
        self._buckets: dict[tuple[int, int], list[tuple[complex, int]]] = {}

    @staticmethod
    def _key(z: complex) -> tuple[int, int]:
        return round(z.real / _BUCKET), round(z.imag / _BUCKET)

    def find(self, z: complex) -> int | None:
        kx, ky = self._key(z)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for other, index in self._buckets.get((kx + dx, ky + dy), ()):
                    if abs(other - z) < _BUCKET and hyperbolic_distance(other, z) < _CENTER_TOL:
                        return index
        return None

    def add(self, z: complex, index: int) -> None:
        self._buckets.setdefault(self._key(z), []).append((z, index))


def _reflect_patch(patch: TilePatch, edge: int) -> TilePatch:
    n = len(patch.vertices)
    v1 = patch.vertices[edge]
    v2 = patch.vertices[(edge + 1) % n]
    mirror = reflect(v1, v2)
    vertices = tuple(DiskPoint.from_complex(mirror(v.to_complex())) for v in patch.vertices)
    return TilePatch(vertices, DiskPoint.from_complex(mirror(patch.center.to_complex())))


def generate(grid: GridKind, radius: int) -> OracleTiling:
    """Reflection closure of the base tile out to the given graph radius."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if radius > 6:
        raise ValueError("the oracle is desk-scale only: radius <= 6")
    base = base_patch(grid)
    tiles = [base]
    ring = [0]
    index = _CenterIndex()
    index.add(0j, 0)
    frontier = [0]
    for n in range(1, radius + 1):
        next_frontier: list[int] = []
        for i in frontier:
            for edge in range(grid.p):
                candidate = _reflect_patch(tiles[i], edge)
                z = candidate.center.to_complex()
                if index.find(z) is None:
                    tiles.append(candidate)
                    ring.append(n)
                    index.add(z, len(tiles) - 1)
                    next_frontier.append(len(tiles) - 1)
        frontier = next_frontier
    adjacency = _shared_edge_adjacency(tiles)
    return OracleTiling(grid, radius, tiles, adjacency, ring)


def _vertex_key(v: DiskPoint) -> tuple[int, int]:
    return round(v.x / _BUCKET), round(v.y / _BUCKET)


def _shared_edge_adjacency(tiles: list[TilePatch]) -> list[set[int]]:
    """Tiles are adjacent iff they share a full edge (both endpoints coincide)."""
    edge_map: dict[tuple[tuple[int, int], tuple[int, int]], list[tuple[int, complex, complex]]] = {}
    adjacency: list[set[int]] = [set() for _ in tiles]
    for i, tile in enumerate(tiles):
        n = len(tile.vertices)
        for e in range(n):
            a = tile.vertices[e]
            b = tile.vertices[(e + 1) % n]
            key = tuple(sorted((_vertex_key(a), _vertex_key(b))))
            for j, za, zb in edge_map.get(key, ()):
                if j == i:
                    continue
                pa, pb = a.to_complex(), b.to_complex()
                direct = max(abs(pa - za), abs(pb - zb))
                flipped = max(abs(pa - zb), abs(pb - za))
                if min(direct, flipped) < _EDGE_TOL:
                    adjacency[i].add(j)
                    adjacency[j].add(i)
            edge_map.setdefault(key, []).append((i, a.to_complex(), b.to_complex()))
    return adjacency


def oracle_bfs(tiling: OracleTiling, start: int, goal: int) -> tuple[int, list[int]]:
    """Breadth-first distance and one path over the closure adjacency."""
    if not (0 <= start < tiling.tile_count and 0 <= goal < tiling.tile_count):
        raise ValueError("tile index out of range")
    if start == goal:
        return 0, [start]
    parent: dict[int, int] = {start: start}
    frontier = [start]
    while frontier:
        nxt: list[int] = []
        for i in frontier:
            for j in tiling.adjacency[i]:
                if j not in parent:
                    parent[j] = i
                    if j == goal:
                        path = [j]
                        while path[-1] != start:
                            path.append(parent[path[-1]])
                        path.reverse()
                        return len(path) - 1, path
                    nxt.append(j)
        frontier = nxt
    raise FrontierLimitedError(f"tile {goal} unreachable from {start} within the generated ball")


def all_distances(tiling: OracleTiling, start: int) -> dict[int, int]:
    dist = {start: 0}
    frontier = [start]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for i in frontier:
            for j in tiling.adjacency[i]:
                if j not in dist:
                    dist[j] = d
                    nxt.append(j)
        frontier = nxt
    return dist


@dataclass
class MatchReport:
    """Outcome of matching the constructive layout onto the closure tiling."""

    grid: GridKind
    radius: int
    matched: dict[Address, int]
    mismatches: list[str]

    @property
    def bijective(self) -> bool:
        return not self.mismatches


def match_addresses(
    tiling: OracleTiling,
    layout: Mapping[Address, TilePatch],
    radius: int | None = None,
) -> MatchReport:
    """Match every layout patch to a closure tile by center proximity.

    The report lists every failure: a layout tile missing from the closure,
    two addresses landing on one tile, or a closure tile never hit.  On a
    clean match ``tiling.address_of`` is filled in.
    """
    radius = tiling.radius if radius is None else radius
    index = _CenterIndex()
    for i, tile in enumerate(tiling.tiles):
        index.add(tile.center.to_complex(), i)
    matched: dict[Address, int] = {}
    claimed: dict[int, Address] = {}
    mismatches: list[str] = []
    for address, patch in layout.items():
        i = index.find(patch.center.to_complex())
        if i is None:
            mismatches.append(f"{address}: no closure tile at its center")
            continue
        if i in claimed:
            mismatches.append(f"{address}: tile {i} already claimed by {claimed[i]}")
            continue
        if not _patch_matches(patch, tiling.tiles[i]):
            mismatches.append(f"{address}: vertex set differs from closure tile {i}")
            continue
        claimed[i] = address
        matched[address] = i
    for i, r in enumerate(tiling.ring):
        if r <= radius and i not in claimed:
            mismatches.append(f"closure tile {i} (ring {r}) received no address")
    report = MatchReport(tiling.grid, radius, matched, mismatches)
    if report.bijective:
        tiling.address_of = {i: a for a, i in matched.items()}
    return report


def _patch_matches(a: TilePatch, b: TilePatch) -> bool:
    """Same polygon as point sets, any rotation/orientation of the vertex cycle."""
    for v in a.vertices:
        zv = v.to_complex()
        if not any(abs(zv - w.to_complex()) < _EDGE_TOL for w in b.vertices):
            return False
    return True
