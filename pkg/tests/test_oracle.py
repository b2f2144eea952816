from __future__ import annotations

import math

import pytest

from hypernav import oracle
from hypernav.fibonacci import fib
from hypernav.navigation import GridKind, layout_ball, ring_size
from hypernav.tree import NodeColor


@pytest.fixture(scope="module")
def pentagrid3():
    return oracle.generate(GridKind.PENTAGRID, 3)


@pytest.fixture(scope="module")
def heptagrid3():
    return oracle.generate(GridKind.HEPTAGRID, 3)


def test_small_closures():
    t1 = oracle.generate(GridKind.PENTAGRID, 1)
    assert t1.tile_count == 6
    t2 = oracle.generate(GridKind.PENTAGRID, 2)
    assert t2.tile_count == 21
    assert t2.ring_count(2) == 15
    h2 = oracle.generate(GridKind.HEPTAGRID, 2)
    assert h2.tile_count == 29
    assert h2.ring_count(2) == 21


def test_ring_populations(pentagrid3, heptagrid3):
    for tiling, grid in ((pentagrid3, GridKind.PENTAGRID), (heptagrid3, GridKind.HEPTAGRID)):
        for n in range(4):
            assert tiling.ring_count(n) == ring_size(grid, n) == (
                1 if n == 0 else grid.p * fib(2 * n - 1)
            )


def test_interior_tiles_have_p_neighbors(pentagrid3, heptagrid3):
    for tiling, p in ((pentagrid3, 5), (heptagrid3, 7)):
        for i in range(tiling.tile_count):
            if tiling.ring[i] < tiling.radius:
                assert len(tiling.adjacency[i]) == p, i
            assert i not in tiling.adjacency[i]
            for j in tiling.adjacency[i]:
                assert i in tiling.adjacency[j]


def test_centers_pairwise_distinct(pentagrid3):
    from hypernav.geometry import hyperbolic_distance

    centers = [t.center.to_complex() for t in pentagrid3.tiles]
    for i in range(0, len(centers), 7):  # sampled; full quadratic scan is slow
        for j in range(i + 1, len(centers)):
            assert hyperbolic_distance(centers[i], centers[j]) > 1e-7


def test_match_addresses_bijection(pentagrid3, heptagrid3):
    for tiling, grid in ((pentagrid3, GridKind.PENTAGRID), (heptagrid3, GridKind.HEPTAGRID)):
        report = oracle.match_addresses(tiling, layout_ball(grid, 3))
        assert report.bijective, report.mismatches[:5]
        assert len(report.matched) == tiling.tile_count
        assert tiling.address_of  # filled on success


def test_match_addresses_negative_control(pentagrid3):
    # swapping the white son placement must break the bijection
    wrong = {NodeColor.WHITE: (2, 3, 4), NodeColor.BLACK: (2, 3)}
    layout = layout_ball(GridKind.PENTAGRID, 3, _son_edges=wrong)
    report = oracle.match_addresses(pentagrid3, layout)
    assert not report.bijective
    assert len(report.mismatches) >= 1


def test_oracle_bfs(pentagrid3):
    assert oracle.oracle_bfs(pentagrid3, 0, 0) == (0, [0])
    ring1 = [i for i in range(pentagrid3.tile_count) if pentagrid3.ring[i] == 1]
    for i in ring1:
        d, path = oracle.oracle_bfs(pentagrid3, 0, i)
        assert d == 1 and path == [0, i]
    # two sector roots: never adjacent in the pentagrid (four tiles per vertex)
    for i in ring1:
        for j in ring1:
            if i != j:
                assert j not in pentagrid3.adjacency[i]
                assert oracle.oracle_bfs(pentagrid3, i, j)[0] == 2


def test_frontier_limited_signal():
    t1 = oracle.generate(GridKind.PENTAGRID, 1)
    # drop adjacency to isolate a tile, then ask for a path to it
    t1.adjacency[5] = set()
    for s in t1.adjacency:
        s.discard(5)
    with pytest.raises(oracle.FrontierLimitedError):
        oracle.oracle_bfs(t1, 0, 5)


def test_radius_cap():
    with pytest.raises(ValueError):
        oracle.generate(GridKind.PENTAGRID, 7)


def test_json_round_trip(pentagrid3):
    oracle.match_addresses(pentagrid3, layout_ball(GridKind.PENTAGRID, 3))
    text = pentagrid3.to_json()
    again = oracle.OracleTiling.from_json(text)
    assert again.tile_count == pentagrid3.tile_count
    assert again.adjacency == pentagrid3.adjacency
    assert again.address_of == pentagrid3.address_of
    assert again.to_json() == text


def test_exponential_growth_toward_phi_squared():
    phi2 = ((1 + math.sqrt(5)) / 2) ** 2
    for grid in GridKind:
        ratios = [ring_size(grid, n + 1) / ring_size(grid, n) for n in range(2, 6)]
        assert abs(ratios[-1] - phi2) / phi2 < 0.05
