import type { NavigatorState } from "./state";
import type { ColorsResponse, WindowResponse } from "./types";

// What actually gets drawn.  Built purely from (state, responses), so two
// identical inputs always yield byte-identical view models; the canvas layer
// below only performs the affine placement of server-provided vertices.

export interface TileView {
  address: string;
  vertices: [number, number][];
  fill: string;
  highlighted: boolean;
}

export interface ArrowView {
  angle: number; // radians, frame of the window
}

export interface ViewModel {
  center: string;
  tiles: TileView[];
  arrow: ArrowView | null; // null when the origin tile is visible
  originAddress: string;
  originVisible: boolean;
}

const LEVEL_FILLS = ["#f4f1ea", "#e3ded2", "#d2ccba", "#c2baa3", "#b1a88c", "#a19676", "#918560"];

export function buildViewModel(
  state: NavigatorState,
  window: WindowResponse,
  colors: ColorsResponse | null,
): ViewModel {
  const tiles: TileView[] = window.tiles
    .map((tile) => {
      let fill: string;
      if (state.mode === "chooser" && colors) {
        fill = colors.colors[tile.address] ?? "#ffffff";
      } else {
        fill = LEVEL_FILLS[Math.min(tile.level ?? 0, LEVEL_FILLS.length - 1)]!;
      }
      return {
        address: tile.address,
        vertices: tile.vertices,
        fill,
        highlighted: tile.address === window.center || tile.address === window.origin_address,
      };
    })
    .sort((a, b) => (a.address < b.address ? -1 : a.address > b.address ? 1 : 0));
  const originVisible = window.origin_arrow === "visible";
  return {
    center: window.center,
    tiles,
    arrow: originVisible ? null : { angle: window.origin_arrow as number },
    originAddress: window.origin_address,
    originVisible,
  };
}

/** Canonical serialization used by the replay tests and render cache. */
export function viewFingerprint(view: ViewModel): string {
  return JSON.stringify(view);
}

export interface CanvasLike {
  width: number;
  height: number;
  getContext(kind: "2d"): CanvasRenderingContext2D | null;
}

/** Affine placement only: disk coordinates in [-1,1]^2 onto the canvas. */
export function drawView(canvas: CanvasLike, view: ViewModel): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    return;
  }
  const size = Math.min(canvas.width, canvas.height);
  const scale = size / 2.2;
  const cx = canvas.width / 2;
  const cy = canvas.height / 2;
  const toCanvas = (x: number, y: number): [number, number] => [cx + x * scale, cy - y * scale];

  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.beginPath();
  ctx.arc(cx, cy, scale, 0, 2 * Math.PI);
  ctx.strokeStyle = "#404040";
  ctx.stroke();

  for (const tile of view.tiles) {
    ctx.beginPath();
    tile.vertices.forEach(([x, y], i) => {
      const [px, py] = toCanvas(x, y);
      if (i === 0) {
        ctx.moveTo(px, py);
      } else {
        ctx.lineTo(px, py);
      }
    });
    ctx.closePath();
    ctx.fillStyle = tile.fill;
    ctx.fill();
    ctx.lineWidth = tile.highlighted ? 2.5 : 1;
    ctx.strokeStyle = tile.highlighted ? "#c03020" : "#303030";
    ctx.stroke();
  }

  if (view.arrow) {
    const from = toCanvas(0, 0);
    const to = toCanvas(0.85 * Math.cos(view.arrow.angle), 0.85 * Math.sin(view.arrow.angle));
    ctx.beginPath();
    ctx.moveTo(from[0], from[1]);
    ctx.lineTo(to[0], to[1]);
    ctx.strokeStyle = "#c03020";
    ctx.lineWidth = 2;
    ctx.stroke();
  }
}

/** Tile whose polygon contains the point, for hover lookups (ray casting). */
export function tileAt(view: ViewModel, x: number, y: number): TileView | null {
  for (const tile of view.tiles) {
    let inside = false;
    const n = tile.vertices.length;
    for (let i = 0, j = n - 1; i < n; j = i++) {
      const [xi, yi] = tile.vertices[i]!;
      const [xj, yj] = tile.vertices[j]!;
      if (yi > y !== yj > y && x < ((xj - xi) * (y - yi)) / (yj - yi) + xi) {
        inside = !inside;
      }
    }
    if (inside) {
      return tile;
    }
  }
  return null;
}
