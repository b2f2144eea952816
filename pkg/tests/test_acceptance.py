"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

from __future__ import annotations

import math
import random
import re
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from hypernav import oracle
from hypernav.broadcast import broadcast, reply
from hypernav.ca import Configuration, flood_rule, run, step
from hypernav.fibonacci import decode, encode, fib, level_bounds
from hypernav.geometry import apply_patch, base_polygon, interior_angles
from hypernav.navigation import (
    Address,
    GridKind,
    ball_size,
    distance,
    enumerate_ball,
    frame_ball,
    frame_transport,
    layout_ball,
    layout_patch,
    neighbors,
    recenter,
    ring_of,
    shortest_path,
)
from hypernav.render import render_svg
from hypernav.tree import (
    NodeColor,
    color_of,
    generate_tree,
    parent,
    path_from_root,
    sons,
)
from reference_ca import ReferenceGraph, restrict
from test_ca import random_ordered_rule, random_totalistic_rule

GOLDEN = Path(__file__).parent / "golden" / "pentagrid_radius3.svg"
PHI_SQUARED = ((1 + math.sqrt(5)) / 2) ** 2


@contextmanager
def criterion(number: int, name: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number:2d} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {number:2d} {name}: PASS")


@pytest.fixture(scope="module")
def tree13():
    return generate_tree(13)


@pytest.fixture(scope="module")
def reference():
    return {grid: ReferenceGraph(grid, 6) for grid in GridKind}


def random_word(length: int, rng: random.Random) -> str:
    chars = ["1"]
    while len(chars) < length:
        chars.append("0" if chars[-1] == "1" else rng.choice("01"))
    return "".join(chars)


def test_01_numeration():
    with criterion(1, "numeration round-trip and level bounds"):
        started = time.perf_counter()
        for n in range(1, 1_000_001):
            w = encode(n)
            assert "11" not in w
            assert decode(w) == n
        for level in range(26):
            first, last = level_bounds(level)
            assert first == fib(2 * level)
            assert last == fib(2 * level + 2) - 1
            assert last - first + 1 == fib(2 * level + 1)
        elapsed = time.perf_counter() - started
        assert elapsed < 10.0, f"took {elapsed:.1f} s"


def test_02_preferred_son_property(tree13):
    with criterion(2, "preferred-son property through level 12"):
        tree = tree13
        words = {n: encode(n) for n in range(1, tree.node_count + 1)}
        violations = 0
        checked = 0
        for level in range(13):
            for node in tree.level_nodes(level):
                son_words = [words[s] for s in tree.son_lists[node]]
                target = words[node] + "00"
                hits = [rank for rank, w in enumerate(son_words, start=1) if w == target]
                expected = 1 if tree.colors[node] is NodeColor.BLACK else 2
                if hits != [expected]:
                    violations += 1
                checked += 1
        assert checked == fib(26) - 1  # ~196k parents
        assert violations == 0


def test_03_tree_coordinate_equivalence(tree13):
    with criterion(3, "coordinate algorithms match the generative tree"):
        tree = tree13
        words = {n: encode(n) for n in range(1, 100_001)}
        mismatches = 0
        for n in range(1, 100_001):
            w = words[n]
            node_color = tree.colors[n]
            if color_of(w) is not node_color:
                mismatches += 1
            # sons of nodes near 1e5 reach level 13; the tree holds them all
            if sons(w) != [encode(s) for s in tree.son_lists[n]]:
                mismatches += 1
            if n > 1:
                par, rank = tree.parents[n]
                if parent(w) != (words[par], rank):
                    mismatches += 1
            else:
                if parent(w) is not None:
                    mismatches += 1
            node = 1
            for rank in path_from_root(w):
                node = tree.son_lists[node][rank - 1]
            if node != n:
                mismatches += 1
        assert mismatches == 0


def test_04_geometric_ground_truth():
    with criterion(4, "oracle bijection and adjacency equality"):
        for grid, ball4_size in ((GridKind.PENTAGRID, 166), (GridKind.HEPTAGRID, 232)):
            t3 = oracle.generate(grid, 3)
            report3 = oracle.match_addresses(t3, layout_ball(grid, 3))
            assert report3.bijective, report3.mismatches[:5]

            t4 = oracle.generate(grid, 4)
            report4 = oracle.match_addresses(t4, layout_ball(grid, 4))
            assert report4.bijective, report4.mismatches[:5]
            index_of = report4.matched
            ball = enumerate_ball(grid, 4)
            assert len(ball) == ball4_size == t4.tile_count
            in_ball = set(index_of.values())
            mismatches = 0
            for a in ball:
                symbolic = {index_of[n] for n in neighbors(a) if n in index_of}
                geometric = t4.adjacency[index_of[a]] & in_ball
                if ring_of(a) < 4:
                    if symbolic != geometric or len(neighbors(a)) != grid.p:
                        mismatches += 1
                elif symbolic != geometric:
                    mismatches += 1
            assert mismatches == 0


def test_05_ring_counts_by_symbolic_bfs():
    with criterion(5, "ring populations and exponential growth"):
        for grid in GridKind:
            # oracle confirmation first, small radii
            t4 = oracle.generate(grid, 4)
            oracle_counts = [t4.ring_count(n) for n in range(5)]
            assert oracle_counts == [1] + [grid.p * fib(2 * n - 1) for n in range(1, 5)]
            # symbolic breadth-first search to depth 6
            dist = {Address.center(grid): 0}
            frontier = [Address.center(grid)]
            for d in range(1, 7):
                nxt = []
                for a in frontier:
                    for n in neighbors(a):
                        if n not in dist:
                            dist[n] = d
                            nxt.append(n)
                frontier = nxt
            counts = [0] * 7
            for d in dist.values():
                counts[d] += 1
            assert counts == [1] + [grid.p * fib(2 * n - 1) for n in range(1, 7)]
            ratio = counts[6] / counts[5]
            assert abs(ratio - PHI_SQUARED) / PHI_SQUARED < 0.05


def test_06_shortest_paths(reference):
    with criterion(6, "shortest paths optimal against oracle"):
        rng = random.Random(606)
        for grid in GridKind:
            ref = reference[grid]
            ball = enumerate_ball(grid, 5)
            for _ in range(200):
                a, b = rng.choice(ball), rng.choice(ball)
                expected, _ = oracle.oracle_bfs(ref.tiling, ref.index_of[a], ref.index_of[b])
                assert distance(a, b) == expected
                path = shortest_path(a, b)
                assert path[0] == a and path[-1] == b
                assert len(path) - 1 == expected
                for x, y in zip(path, path[1:]):
                    assert y in neighbors(x)


def test_07_linear_time_behavior():
    with criterion(7, "linear-time word algorithms and deep distance"):
        rng = random.Random(707)

        def best_time(fn, arg, repeats=3):
            best = float("inf")
            for _ in range(repeats):
                t0 = time.perf_counter()
                fn(arg)
                best = min(best, time.perf_counter() - t0)
            return best

        w3 = random_word(1_000, rng)
        w4 = random_word(10_000, rng)
        for fn in (parent, sons, path_from_root):
            t4 = best_time(fn, w4)
            assert t4 < 0.050, f"{fn.__name__} took {t4 * 1000:.1f} ms on 1e4 digits"
            t3 = best_time(fn, w3)
            assert t4 / max(t3, 1e-9) <= 20, f"{fn.__name__} scaling {t4 / t3:.1f}x"
        a = Address(GridKind.PENTAGRID, 1, random_word(1_000, rng))
        b = Address(GridKind.PENTAGRID, 3, random_word(1_000, rng))
        t0 = time.perf_counter()
        distance(a, b)
        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0, f"deep distance took {elapsed:.2f} s"


def test_08_recentering(reference):
    with criterion(8, "recentering identities, distances, frame coherence"):
        rng = random.Random(808)
        for grid in GridKind:
            ball3 = enumerate_ball(grid, 3)
            for x in ball3:
                assert recenter(x, x) == Address.center(grid)
            ball4 = enumerate_ball(grid, 4)
            for _ in range(100):
                a, c = rng.choice(ball4), rng.choice(ball4)
                assert distance(recenter(a, c), Address.center(grid)) == distance(a, c)
            # frame coherence: transported oracle geometry equals direct layout
            ref = reference[grid]
            for c in [rng.choice(ball3) for _ in range(5)]:
                transport = frame_transport(c)
                for framed, global_a in frame_ball(c, 3):
                    oracle_patch = ref.tiling.tiles[ref.index_of[global_a]]
                    moved = apply_patch(transport, oracle_patch)
                    direct = layout_patch(framed)
                    assert (
                        abs(direct.center.to_complex() - moved.center.to_complex()) < 1e-6
                    )
                    for v in moved.vertices:
                        assert min(
                            abs(v.to_complex() - w.to_complex()) for w in direct.vertices
                        ) < 1e-6


def test_09_cellular_automata(reference):
    with criterion(9, "CA step equivalence and flood growth"):
        rng = random.Random(909)
        for grid, expected in ((GridKind.PENTAGRID, 166), (GridKind.HEPTAGRID, 232)):
            ref = reference[grid]
            ball3 = enumerate_ball(grid, 3)
            for trial in range(20):
                rule = (
                    random_totalistic_rule(grid, rng)
                    if trial % 2 == 0
                    else random_ordered_rule(grid, rng)
                )
                cells = {a: 1 for a in rng.sample(ball3, k=rng.randint(1, 10))}
                config = ref_config = Configuration(grid, cells)
                for t in range(1, 6):
                    config = step(rule, config)
                    ref_config = ref.step(rule, ref_config)
                    sound_radius = ref.radius - max(0, t - 4)
                    assert restrict(config, sound_radius) == restrict(
                        ref_config, sound_radius
                    ), (grid.tag, trial, t)
            final, series = run(
                flood_rule(grid), Configuration(grid, {Address.center(grid): 1}), 4
            )
            assert final.support_size == expected
            assert series == [ball_size(grid, n) for n in range(1, 5)]


def test_10_broadcast_protocol():
    with criterion(10, "broadcast exactly-once and reply reversal"):
        rng = random.Random(1010)
        for grid in GridKind:
            ball3 = enumerate_ball(grid, 3)
            origins = [rng.choice(ball3) for _ in range(50)]
            for i, origin in enumerate(origins):
                ttl = rng.randint(0, 4)
                deliveries = broadcast(origin, ttl)
                assert len(deliveries) == ball_size(grid, ttl)  # exactly once per tile
                for tile, hops in deliveries.items():
                    assert len(hops) == distance(origin, tile)
                # replies: all deliveries for a few origins, a sample otherwise
                if i < 10:
                    sample = list(deliveries.items())
                else:
                    sample = rng.sample(list(deliveries.items()), k=min(20, len(deliveries)))
                for tile, hops in sample:
                    route = reply(origin, hops)
                    assert route[0] == tile
                    assert route[-1] == origin
                    assert len(route) - 1 == len(hops)


def test_11_rendering():
    with criterion(11, "deterministic rendering against golden"):
        svg = render_svg(GridKind.PENTAGRID, Address.center(GridKind.PENTAGRID), 3)
        golden = GOLDEN.read_text()
        number = re.compile(r"-?\d+\.\d+")
        got = [float(x) for x in number.findall(svg)]
        want = [float(x) for x in number.findall(golden)]
        assert len(got) == len(want)
        assert all(abs(g - w) < 1e-6 for g, w in zip(got, want))
        assert number.sub("#", svg) == number.sub("#", golden)

        pentagon = base_polygon(5, 4)
        assert abs(abs(pentagon.vertices[0].to_complex()) - 0.3982) < 1e-3

        heptagon = base_polygon(7, 3)
        for angle in interior_angles(heptagon):
            assert abs(angle - 2 * math.pi / 3) < 1e-7
