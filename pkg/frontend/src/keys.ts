import type { WindowResponse } from "./types";

// Fixed key layout: digits 1..p always select edge (digit - 1), no matter
// how the view is turned.  Arrow keys alias the four most salient edges.

export function edgeForKey(key: string, edgeCount: number, window: WindowResponse | null): number | null {
  if (/^[1-7]$/.test(key)) {
    const edge = Number(key) - 1;
    return edge < edgeCount ? edge : null;
  }
  if (window === null) {
    return null;
  }
  const aliases: Record<string, number> = {
    ArrowDown: 0, // toward the father / origin side
    ArrowRight: 1,
    ArrowUp: Math.floor(edgeCount / 2), // outward
    ArrowLeft: edgeCount - 1,
  };
  return key in aliases ? aliases[key]! : null;
}

/** Edge whose midpoint direction is closest to the arrow angle (greedy homing). */
export function edgeTowardAngle(window: WindowResponse, angle: number): number {
  const tile = window.tiles.find((t) => t.address === window.center);
  if (!tile) {
    throw new Error("window is missing its center tile");
  }
  let best = 0;
  let bestGap = Infinity;
  for (let e = 0; e < tile.vertices.length; e++) {
    const [x1, y1] = tile.vertices[e]!;
    const [x2, y2] = tile.vertices[(e + 1) % tile.vertices.length]!;
    const mid = Math.atan2((y1 + y2) / 2, (x1 + x2) / 2);
    let gap = Math.abs(mid - angle) % (2 * Math.PI);
    if (gap > Math.PI) {
      gap = 2 * Math.PI - gap;
    }
    if (gap < bestGap) {
      bestGap = gap;
      best = e;
    }
  }
  return best;
}
