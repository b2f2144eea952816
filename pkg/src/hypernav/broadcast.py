"""Tile-to-tile broadcast and reply routing.

A sender treats itself as the central tile and floods its ball: each tile
relays to its sons in the sender-rooted frame, appending one constant-size
hop entry.  The accumulated hop sequence is the receiver's relative address
(first entry: sector around the sender; then son ranks).  A reply simply
walks the recorded hops backwards along father links, so it needs no
routing state anywhere.
"""

from __future__ import annotations

from hypernav.navigation import Address, format_address, frame_ball, from_frame
from hypernav.tree import parent, path_from_root, son_by_rank

RelativeAddress = tuple[int, ...]


def broadcast(origin: Address, ttl: int) -> dict[Address, RelativeAddress]:
    """Deliver to every tile within ``ttl`` of the origin, exactly once each.

    The relative address of a tile has one entry per relay hop; the origin
    itself receives the empty address.
    """
    if ttl < 0:
        raise ValueError("ttl must be >= 0")
    if ttl > 6:
        raise ValueError("broadcast simulation is desk-scale only: ttl <= 6")
    deliveries: dict[Address, RelativeAddress] = {}
    for framed, tile in frame_ball(origin, ttl):
        if framed.is_center:
            deliveries[tile] = ()
        else:
            deliveries[tile] = (framed.sector, *path_from_root(framed.word))
    return deliveries


def _framed_from_hops(origin: Address, hops: RelativeAddress) -> Address:
    if not hops:
        return Address.center(origin.grid)
    sector = hops[0]
    if not 1 <= sector <= origin.grid.p:
        raise ValueError(f"first hop {sector} exceeds the sector count")
    word = "1"
    for rank in hops[1:]:
        word = son_by_rank(word, rank)  # raises when the rank exceeds the arity
    return Address(origin.grid, sector, word)


def reply(origin: Address, hops: RelativeAddress) -> list[Address]:
    """Route from the tile holding ``hops`` back to the origin, reversing the address.

    Returns the visited tiles in order; the route has exactly len(hops)
    steps and ends at the origin.
    """
    framed = _framed_from_hops(origin, hops)
    route = [from_frame(origin, framed)]
    while not framed.is_center:
        step = parent(framed.word)
        framed = (
            Address.center(origin.grid)
            if step is None
            else Address(origin.grid, framed.sector, step[0])
        )
        route.append(from_frame(origin, framed))
    return route


def deliveries_to_json(origin: Address, deliveries: dict[Address, RelativeAddress]) -> dict:
    return {
        "origin": format_address(origin),
        "deliveries": [
            {"address": format_address(a), "hops": list(h)}
            for a, h in sorted(deliveries.items(), key=lambda kv: kv[0].sort_key())
        ],
    }
