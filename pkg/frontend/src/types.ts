// Payload shapes of the navigation service (docs/schemas/ in the core repo).

export type AddressString = string;

export interface WindowTile {
  address: AddressString;
  frame_address: AddressString;
  level: number | null;
  color: "black" | "white" | null;
  vertices: [number, number][];
  neighbors: AddressString[];
}

export interface WindowResponse {
  grid: "P5" | "H7";
  center: AddressString;
  radius: number;
  edge_count: number;
  tiles: WindowTile[];
  origin_address: AddressString;
  origin_arrow: number | "visible";
}

export interface ColorsResponse {
  center: AddressString;
  radius: number;
  colors: Record<AddressString, string>;
}

export interface PathResponse {
  from: AddressString;
  to: AddressString;
  distance: number;
  path: AddressString[];
}

export interface NeighborsResponse {
  address: AddressString;
  neighbors: AddressString[];
}

export type GridTag = "p5" | "h7";

export function centerAddress(grid: GridTag): AddressString {
  return grid === "p5" ? "P5:C" : "H7:C";
}

export function edgeCount(grid: GridTag): number {
  return grid === "p5" ? 5 : 7;
}
