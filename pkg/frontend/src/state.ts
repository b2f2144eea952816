import type { AddressString, GridTag, WindowResponse } from "./types";
import { centerAddress } from "./types";

export type Mode = "coordinates" | "chooser";

// The whole UI is a pure function of this state plus the server responses.
export interface NavigatorState {
  grid: GridTag;
  center: AddressString;
  radius: number;
  mode: Mode;
  trail: AddressString[]; // starts at the global center
}

export function initialState(grid: GridTag, radius = 2, mode: Mode = "coordinates"): NavigatorState {
  const center = centerAddress(grid);
  return { grid, center, radius, mode, trail: [center] };
}

function centerTileNeighbors(window: WindowResponse): AddressString[] {
  const tile = window.tiles.find((t) => t.address === window.center);
  if (!tile) {
    throw new Error(`window for ${window.center} does not contain its own center`);
  }
  return tile.neighbors;
}

/** Move to the neighbor across edge k of the current center. */
export function pressDirection(
  state: NavigatorState,
  window: WindowResponse,
  k: number,
): NavigatorState {
  const neighbors = centerTileNeighbors(window);
  const target = neighbors[k];
  if (target === undefined) {
    throw new Error(`edge ${k} out of range (tile has ${neighbors.length} edges)`);
  }
  return { ...state, center: target, trail: [...state.trail, target] };
}

/** Edge index of the current window's center that leads back to `previous`. */
export function backEdge(window: WindowResponse, previous: AddressString): number {
  const index = centerTileNeighbors(window).indexOf(previous);
  if (index < 0) {
    throw new Error(`${previous} is not adjacent to ${window.center}`);
  }
  return index;
}

export function toggleMode(state: NavigatorState): NavigatorState {
  return { ...state, mode: state.mode === "chooser" ? "coordinates" : "chooser" };
}

/** Replay a recorded trail from the start; the result only depends on the trail. */
export function stateFromTrail(
  grid: GridTag,
  trail: AddressString[],
  radius = 2,
  mode: Mode = "coordinates",
): NavigatorState {
  if (trail.length === 0 || trail[0] !== centerAddress(grid)) {
    throw new Error("a trail must start at the global center");
  }
  return { grid, center: trail[trail.length - 1]!, radius, mode, trail: [...trail] };
}
