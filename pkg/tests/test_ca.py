from __future__ import annotations

import random
from itertools import combinations_with_replacement, product

import pytest

from hypernav.ca import Configuration, Rule, _histogram, flood_rule, run, step
from hypernav.navigation import Address, GridKind, ball_size, enumerate_ball
from reference_ca import ReferenceGraph, restrict


def random_totalistic_rule(grid: GridKind, rng: random.Random) -> Rule:
    table = {}
    for own in (0, 1):
        for combo in combinations_with_replacement((0, 1), grid.p):
            summary = _histogram(combo, 2)
            if own == 0 and summary[1] == 0:
                table[(own, summary)] = 0
            else:
                table[(own, summary)] = rng.randint(0, 1)
    return Rule(2, "totalistic", grid.p, table)


def random_ordered_rule(grid: GridKind, rng: random.Random) -> Rule:
    table = {}
    for own in (0, 1):
        for combo in product((0, 1), repeat=grid.p):
            if own == 0 and not any(combo):
                table[(own, combo)] = 0
            else:
                table[(own, combo)] = rng.randint(0, 1)
    return Rule(2, "ordered", grid.p, table)


def random_config(grid: GridKind, rng: random.Random, radius: int = 3) -> Configuration:
    ball = enumerate_ball(grid, radius)
    cells = {a: 1 for a in rng.sample(ball, k=rng.randint(1, 12))}
    return Configuration(grid, cells)


@pytest.fixture(scope="module")
def reference():
    return {grid: ReferenceGraph(grid, 6) for grid in GridKind}


def test_empty_configuration_stays_empty():
    for grid in GridKind:
        rule = flood_rule(grid)
        empty = Configuration(grid, {})
        assert step(rule, empty).states == {}


def test_flood_growth_counts():
    grid = GridKind.PENTAGRID
    rule = flood_rule(grid)
    config = Configuration(grid, {Address.center(grid): 1})
    config = step(rule, config)
    assert config.support_size == 6
    config = step(rule, config)
    assert config.support_size == 21


def test_flood_run_series():
    for grid, expected in ((GridKind.PENTAGRID, 166), (GridKind.HEPTAGRID, 232)):
        rule = flood_rule(grid)
        config = Configuration(grid, {Address.center(grid): 1})
        final, series = run(rule, config, 4)
        assert final.support_size == expected
        assert series == [ball_size(grid, n) for n in range(1, 5)]


def test_run_zero_steps_is_identity():
    grid = GridKind.PENTAGRID
    config = Configuration(grid, {Address(grid, 1, "10"): 1})
    final, series = run(flood_rule(grid), config, 0)
    assert final.states == config.states
    assert series == []


def test_support_ratio_approaches_phi_squared():
    grid = GridKind.PENTAGRID
    rule = flood_rule(grid)
    config = Configuration(grid, {Address.center(grid): 1})
    _, series = run(rule, config, 6)
    ring_sizes = [series[0] - 1] + [series[i + 1] - series[i] for i in range(5)]
    phi2 = ((1 + 5 ** 0.5) / 2) ** 2
    assert abs(ring_sizes[-1] / ring_sizes[-2] - phi2) / phi2 < 0.05


def test_symbolic_step_equals_reference_graph_step(reference):
    rng = random.Random(77)
    for grid in GridKind:
        ref = reference[grid]
        for trial in range(6):
            rule = (
                random_totalistic_rule(grid, rng)
                if trial % 2 == 0
                else random_ordered_rule(grid, rng)
            )
            config = reference_config = random_config(grid, rng)
            for t in range(1, 6):
                config = step(rule, config)
                reference_config = ref.step(rule, reference_config)
                sound_radius = ref.radius - max(0, t - 4)
                assert restrict(config, sound_radius) == restrict(
                    reference_config, sound_radius
                ), (grid, trial, t)


def test_determinism_under_input_shuffling():
    rng = random.Random(3)
    grid = GridKind.HEPTAGRID
    rule = random_totalistic_rule(grid, rng)
    config = random_config(grid, rng)
    baseline = step(rule, config)
    for _ in range(5):
        items = list(config.states.items())
        rng.shuffle(items)
        assert step(rule, Configuration(grid, dict(items))).states == baseline.states


def test_totalistic_rules_ignore_neighbor_order():
    rng = random.Random(4)
    grid = GridKind.PENTAGRID
    rule = random_totalistic_rule(grid, rng)
    states = [rng.randint(0, 1) for _ in range(grid.p)]
    base = rule.next_state(1, states)
    for _ in range(10):
        rng.shuffle(states)
        assert rule.next_state(1, states) == base


def test_rule_validation():
    with pytest.raises(ValueError):
        Rule(2, "totalistic", 5, {})
    table = {}
    for own in (0, 1):
        for combo in combinations_with_replacement((0, 1), 5):
            table[(own, _histogram(combo, 2))] = 1
    with pytest.raises(ValueError):
        Rule(2, "totalistic", 5, table)  # quiescent state must stay quiescent
    with pytest.raises(ValueError):
        Rule(1, "totalistic", 5, {})
    with pytest.raises(ValueError):
        Rule(2, "diagonal", 5, {})


def test_state_out_of_range_rejected():
    grid = GridKind.PENTAGRID
    rule = flood_rule(grid)
    config = Configuration(grid, {Address.center(grid): 7})
    with pytest.raises(ValueError):
        step(rule, config)


def test_rule_grid_mismatch_rejected():
    rule = flood_rule(GridKind.PENTAGRID)
    config = Configuration(GridKind.HEPTAGRID, {Address.center(GridKind.HEPTAGRID): 1})
    with pytest.raises(ValueError):
        step(rule, config)


def test_json_round_trip():
    grid = GridKind.HEPTAGRID
    rule = flood_rule(grid)
    assert Rule.from_json(rule.to_json()).table == dict(rule.table)
    config = Configuration(grid, {Address(grid, 2, "100"): 1, Address.center(grid): 1})
    assert Configuration.from_json(config.to_json()).states == config.states


def test_config_rejects_wrong_grid_cells():
    with pytest.raises(ValueError):
        Configuration(GridKind.PENTAGRID, {Address(GridKind.HEPTAGRID, 1, "1"): 1})
