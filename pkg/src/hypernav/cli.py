"""Command-line front end.

Exit codes: 0 success, 1 validation failure (bad words, addresses, oracle
mismatch), 2 usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from hypernav import broadcast as broadcast_mod
from hypernav import ca as ca_mod
from hypernav import oracle as oracle_mod
from hypernav.fibonacci import decode, encode
from hypernav.navigation import (
    GridKind,
    distance,
    format_address,
    layout_ball,
    neighbors,
    parse_address,
    recenter,
    ring_size,
    shortest_path,
)
from hypernav.render import render_svg
from hypernav.tree import parent, sons


def _build_parser() -> argparse.ArgumentParser:
    # --json is accepted both before and after the subcommand; SUPPRESS keeps
    # the subparser from clobbering a flag already parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="machine-readable output",
    )
    parser = argparse.ArgumentParser(prog="hypernav", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("encode", parents=[common]).add_argument("n", type=int)
    sub.add_parser("decode", parents=[common]).add_argument("word")
    sub.add_parser("parent", parents=[common]).add_argument("address")
    sub.add_parser("sons", parents=[common]).add_argument("address")
    sub.add_parser("neighbors", parents=[common]).add_argument("address")
    path = sub.add_parser("path", parents=[common])
    path.add_argument("start")
    path.add_argument("goal")
    ring = sub.add_parser("ring", parents=[common])
    ring.add_argument("grid")
    ring.add_argument("n", type=int)
    rec = sub.add_parser("recenter", parents=[common])
    rec.add_argument("address")
    rec.add_argument("center")
    bc = sub.add_parser("broadcast", parents=[common])
    bc.add_argument("origin")
    bc.add_argument("ttl", type=int)
    car = sub.add_parser("ca", parents=[common])
    casub = car.add_subparsers(dest="ca_command", required=True)
    carun = casub.add_parser("run", parents=[common])
    carun.add_argument("--rule", required=True)
    carun.add_argument("--config", required=True)
    carun.add_argument("--steps", type=int, required=True)
    ver = sub.add_parser("oracle", parents=[common])
    versub = ver.add_subparsers(dest="oracle_command", required=True)
    verify = versub.add_parser("verify", parents=[common])
    verify.add_argument("--grid", required=True)
    verify.add_argument("--radius", type=int, required=True)
    rend = sub.add_parser("render", parents=[common])
    rend.add_argument("--grid", required=True)
    rend.add_argument("--radius", type=int, required=True)
    rend.add_argument("--center", default=None)
    rend.add_argument("-o", "--output", required=True)
    srv = sub.add_parser("serve", parents=[common])
    srv.add_argument("--port", type=int, default=8651)
    srv.add_argument("--host", default="127.0.0.1")
    return parser


def _emit(args: argparse.Namespace, value, plain: str | None = None) -> None:
    if getattr(args, "json", False):
        print(json.dumps(value, indent=1))
    else:
        print(plain if plain is not None else value)


def _run(args: argparse.Namespace) -> int:
    if args.command == "encode":
        _emit(args, encode(args.n))
    elif args.command == "decode":
        _emit(args, decode(args.word))
    elif args.command == "parent":
        a = parse_address(args.address)
        if a.is_center:
            raise ValueError("the central tile has no parent")
        step = parent(a.word)
        if step is None:
            _emit(args, {"parent": f"{a.grid.tag}:C", "rank": None}, f"{a.grid.tag}:C")
        else:
            word, rank = step
            addr = f"{a.grid.tag}:{a.sector}:{word}"
            _emit(args, {"parent": addr, "rank": rank}, f"{addr} rank {rank}")
    elif args.command == "sons":
        a = parse_address(args.address)
        if a.is_center:
            words = [format_address(n) for n in neighbors(a)]
        else:
            words = [f"{a.grid.tag}:{a.sector}:{w}" for w in sons(a.word)]
        _emit(args, words, "\n".join(words))
    elif args.command == "neighbors":
        a = parse_address(args.address)
        out = [format_address(n) for n in neighbors(a)]
        _emit(args, out, "\n".join(out))
    elif args.command == "path":
        a, b = parse_address(args.start), parse_address(args.goal)
        path = [format_address(x) for x in shortest_path(a, b)]
        _emit(args, {"distance": len(path) - 1, "path": path},
              f"distance {len(path) - 1}\n" + "\n".join(path))
    elif args.command == "ring":
        grid = GridKind.from_tag(args.grid)
        _emit(args, ring_size(grid, args.n))
    elif args.command == "recenter":
        a, c = parse_address(args.address), parse_address(args.center)
        _emit(args, format_address(recenter(a, c)))
    elif args.command == "broadcast":
        origin = parse_address(args.origin)
        deliveries = broadcast_mod.broadcast(origin, args.ttl)
        doc = broadcast_mod.deliveries_to_json(origin, deliveries)
        if getattr(args, "json", False):
            print(json.dumps(doc, indent=1))
        else:
            for entry in doc["deliveries"]:
                hops = ".".join(str(h) for h in entry["hops"]) or "-"
                print(f"{entry['address']} {hops}")
    elif args.command == "ca":
        with open(args.rule) as fh:
            rule = ca_mod.Rule.from_json(fh.read())
        with open(args.config) as fh:
            config = ca_mod.Configuration.from_json(fh.read())
        final, series = ca_mod.run(rule, config, args.steps)
        doc = {"config": final.to_json_dict(), "support_series": series}
        print(json.dumps(doc, indent=1))
    elif args.command == "oracle":
        grid = GridKind.from_tag(args.grid)
        tiling = oracle_mod.generate(grid, args.radius)
        report = oracle_mod.match_addresses(tiling, layout_ball(grid, args.radius))
        if report.bijective:
            _emit(args, {"bijection": "OK", "tiles": tiling.tile_count},
                  f"bijection: OK ({tiling.tile_count} tiles)")
        else:
            for line in report.mismatches:
                print(line, file=sys.stderr)
            print("bijection: FAILED", file=sys.stderr)
            return 1
    elif args.command == "render":
        grid = GridKind.from_tag(args.grid)
        from hypernav.navigation import Address

        center = parse_address(args.center) if args.center else Address.center(grid)
        svg = render_svg(grid, center, args.radius)
        with open(args.output, "w") as fh:
            fh.write(svg)
        _emit(args, {"written": args.output}, f"wrote {args.output}")
    elif args.command == "serve":
        from hypernav.service import serve

        serve(args.port, args.host)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
