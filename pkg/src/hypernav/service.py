"""Stateless HTTP+JSON service over the navigation core.

Every handler is a pure function of its query; malformed input yields 400,
combining addresses of different grids yields 422, both with a
machine-readable reason.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from hypernav import ca
from hypernav.navigation import (
    Address,
    GridKind,
    GridMismatchError,
    distance,
    format_address,
    frame_ball,
    layout_patch,
    neighbors,
    origin_direction,
    parse_address,
    recenter,
    ring_of,
    shortest_path,
)
from hypernav.render import palette_color
from hypernav.tree import color_of

_MAX_RADIUS = 6


class BadRequest(ValueError):
    pass


def _parse(text: str) -> Address:
    try:
        return parse_address(text)
    except GridMismatchError:
        raise
    except ValueError as exc:
        raise BadRequest(str(exc)) from exc


def _check_radius(radius: int) -> None:
    if not 0 <= radius <= _MAX_RADIUS:
        raise BadRequest(f"radius must be between 0 and {_MAX_RADIUS}")


def window_payload(center: Address, radius: int) -> dict:
    """The window document the navigator draws: geometry in the center's frame."""
    grid = center.grid
    origin = Address.center(grid)
    tiles = []
    for framed, global_address in frame_ball(center, radius):
        patch = layout_patch(framed)
        tiles.append(
            {
                "address": format_address(global_address),
                "frame_address": format_address(framed),
                "level": None if global_address.is_center else ring_of(global_address) - 1,
                "color": None if global_address.is_center else color_of(global_address.word).value,
                "vertices": [[round(v.x, 12), round(v.y, 12)] for v in patch.vertices],
                "neighbors": [format_address(n) for n in neighbors(global_address)],
            }
        )
    origin_visible = distance(center, origin) <= radius
    return {
        "grid": grid.tag,
        "center": format_address(center),
        "radius": radius,
        "tiles": tiles,
        "origin_address": format_address(recenter(origin, center)),
        "origin_arrow": "visible" if origin_visible else origin_direction(center),
        "edge_count": grid.p,
    }


def create_app() -> FastAPI:
    app = FastAPI(title="hypernav", docs_url=None, redoc_url=None)

    @app.exception_handler(BadRequest)
    async def _bad_request(_request: Request, exc: BadRequest) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": "bad_request", "reason": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def _malformed_params(_request: Request, exc: RequestValidationError) -> JSONResponse:
        # malformed parameters are 400; 422 is reserved for grid mismatches
        return JSONResponse(status_code=400, content={"error": "bad_request", "reason": str(exc.errors())})

    @app.exception_handler(GridMismatchError)
    async def _mismatch(_request: Request, exc: GridMismatchError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"error": "grid_mismatch", "reason": str(exc)})

    @app.get("/api/v1/window")
    def window(grid: str, center: str, radius: int) -> dict:
        try:
            kind = GridKind.from_tag(grid)
        except ValueError as exc:
            raise BadRequest(str(exc)) from exc
        c = _parse(center)
        if c.grid is not kind:
            raise GridMismatchError(f"center {center} does not belong to {kind.tag}")
        _check_radius(radius)
        return window_payload(c, radius)

    @app.get("/api/v1/neighbors")
    def neighbors_endpoint(address: str) -> dict:
        a = _parse(address)
        return {
            "address": format_address(a),
            "neighbors": [format_address(n) for n in neighbors(a)],
        }

    @app.get("/api/v1/path")
    def path_endpoint(start: str = Query(alias="from"), to: str = Query()) -> dict:
        a, b = _parse(start), _parse(to)
        path = shortest_path(a, b)
        return {
            "from": format_address(a),
            "to": format_address(b),
            "distance": len(path) - 1,
            "path": [format_address(x) for x in path],
        }

    @app.get("/api/v1/colors")
    def colors_endpoint(center: str, radius: int) -> dict:
        c = _parse(center)
        _check_radius(radius)
        colors = {
            format_address(global_address): palette_color(global_address)
            for _, global_address in frame_ball(c, radius)
        }
        return {"center": format_address(c), "radius": radius, "colors": colors}

    @app.post("/api/v1/ca/step")
    def ca_step_endpoint(body: dict) -> dict:
        try:
            rule = ca.Rule.from_json_dict(body["rule"])
            config = ca.Configuration.from_json_dict(body["config"])
            result = ca.step(rule, config)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GridMismatchError):
                raise
            raise BadRequest(f"bad rule/config payload: {exc}") from exc
        return {"config": result.to_json_dict(), "support": result.support_size}

    return app


def serve(port: int, host: str = "127.0.0.1") -> None:
    import uvicorn

    uvicorn.run(create_app(), port=port, host=host, log_level="warning")
