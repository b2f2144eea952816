"""Synchronous cellular automata over tile addresses.

Configurations are sparse: only non-quiescent cells are stored.  A rule is
either totalistic (reads a histogram of neighbor states) or ordered (reads
the full neighbor tuple by edge index).  One step updates the support plus
its boundary simultaneously; everything else stays quiescent because rules
must map an all-quiescent neighborhood of a quiescent cell to quiescent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Iterable, Mapping

from hypernav.navigation import Address, GridKind, format_address, neighbors, parse_address

Summary = tuple[int, ...]


def _histogram(states: Iterable[int], state_count: int) -> Summary:
    counts = [0] * state_count
    for s in states:
        counts[s] += 1
    return tuple(counts)


@dataclass(frozen=True)
class Rule:
    state_count: int
    mode: str  # "totalistic" | "ordered"
    arity: int  # neighbors per cell: 5 or 7
    table: Mapping[tuple[int, Summary], int]

    def __post_init__(self) -> None:
        if self.state_count < 2:
            raise ValueError("a rule needs at least two states")
        if self.mode not in ("totalistic", "ordered"):
            raise ValueError(f"unknown rule mode {self.mode!r}")
        if self.arity not in (5, 7):
            raise ValueError("arity must be 5 or 7")
        missing = [key for key in self._domain() if key not in self.table]
        if missing:
            raise ValueError(f"rule table is missing {len(missing)} entries, e.g. {missing[0]}")
        quiet = _histogram([0] * self.arity, self.state_count) if self.mode == "totalistic" \
            else (0,) * self.arity
        if self.table[(0, quiet)] != 0:
            raise ValueError("the quiescent state must be stable in a quiescent neighborhood")
        for (state, _), nxt in self.table.items():
            if not (0 <= state < self.state_count and 0 <= nxt < self.state_count):
                raise ValueError("rule entry state out of range")

    def _domain(self) -> list[tuple[int, Summary]]:
        if self.mode == "totalistic":
            summaries = [
                _histogram(combo, self.state_count)
                for combo in combinations_with_replacement(range(self.state_count), self.arity)
            ]
        else:
            summaries = list(product(range(self.state_count), repeat=self.arity))
        return [(s, summary) for s in range(self.state_count) for summary in set(summaries)]

    def next_state(self, own: int, neighbor_states: list[int]) -> int:
        if any(not 0 <= s < self.state_count for s in neighbor_states) or not (
            0 <= own < self.state_count
        ):
            raise ValueError("cell state out of range for this rule")
        if self.mode == "totalistic":
            summary = _histogram(neighbor_states, self.state_count)
        else:
            summary = tuple(neighbor_states)
        return self.table[(own, summary)]

    def to_json_dict(self) -> dict:
        entries = [
            {"state": state, "summary": list(summary), "next": nxt}
            for (state, summary), nxt in sorted(self.table.items())
        ]
        return {"states": self.state_count, "mode": self.mode, "arity": self.arity,
                "entries": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=1)

    @classmethod
    def from_json_dict(cls, doc: dict) -> Rule:
        table = {
            (entry["state"], tuple(entry["summary"])): entry["next"]
            for entry in doc["entries"]
        }
        return cls(doc["states"], doc["mode"], doc["arity"], table)

    @classmethod
    def from_json(cls, text: str) -> Rule:
        return cls.from_json_dict(json.loads(text))


def flood_rule(grid: GridKind) -> Rule:
    """Two states: a cell lights up next to any lit cell and never goes dark."""
    table = {}
    for own in (0, 1):
        for lit in range(grid.p + 1):
            summary = _histogram([1] * lit + [0] * (grid.p - lit), 2)
            table[(own, summary)] = 1 if own == 1 or lit >= 1 else 0
    return Rule(2, "totalistic", grid.p, table)


@dataclass
class Configuration:
    grid: GridKind
    states: dict[Address, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.states = {a: s for a, s in self.states.items() if s != 0}
        for a in self.states:
            if a.grid is not self.grid:
                raise ValueError(f"address {a} does not belong to {self.grid.tag}")

    @property
    def support_size(self) -> int:
        return len(self.states)

    def state_at(self, a: Address) -> int:
        return self.states.get(a, 0)

    def to_json_dict(self) -> dict:
        cells = [
            {"address": format_address(a), "state": s}
            for a, s in sorted(self.states.items(), key=lambda kv: kv[0].sort_key())
        ]
        return {"grid": self.grid.tag, "cells": cells}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=1)

    @classmethod
    def from_json_dict(cls, doc: dict) -> Configuration:
        grid = GridKind.from_tag(doc["grid"])
        states: dict[Address, int] = {}
        for cell in doc["cells"]:
            a = parse_address(cell["address"])
            if a.grid is not grid:
                raise ValueError(f"cell {cell['address']} does not belong to {grid.tag}")
            states[a] = cell["state"]
        return cls(grid, states)

    @classmethod
    def from_json(cls, text: str) -> Configuration:
        return cls.from_json_dict(json.loads(text))


def step(rule: Rule, config: Configuration) -> Configuration:
    """One synchronous update of the support and its neighbor boundary."""
    if rule.arity != config.grid.p:
        raise ValueError("rule arity does not match the grid")
    neighbor_lists: dict[Address, list[Address]] = {}
    candidates = set(config.states)
    for a in config.states:
        ns = neighbors(a)
        neighbor_lists[a] = ns
        candidates.update(ns)
    new_states: dict[Address, int] = {}
    for a in candidates:
        ns = neighbor_lists.get(a) or neighbors(a)
        nxt = rule.next_state(config.state_at(a), [config.state_at(n) for n in ns])
        if nxt != 0:
            new_states[a] = nxt
    return Configuration(config.grid, new_states)


def run(rule: Rule, config: Configuration, steps: int) -> tuple[Configuration, list[int]]:
    """Iterate ``steps`` times; also report the support size after every step."""
    if steps < 0:
        raise ValueError("step count must be >= 0")
    support_series = []
    current = config
    for _ in range(steps):
        current = step(rule, current)
        support_series.append(current.support_size)
    return current, support_series
