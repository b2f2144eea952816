import type {
  AddressString,
  ColorsResponse,
  GridTag,
  NeighborsResponse,
  PathResponse,
  WindowResponse,
} from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    public reason: string,
  ) {
    super(`service error ${status}: ${reason}`);
  }
}

// Thin fetch wrapper; all geometry and navigation stays on the server side.
export class ApiClient {
  constructor(private baseUrl: string) {}

  private async get<T>(path: string, params: Record<string, string>): Promise<T> {
    const url = new URL(`/api/v1/${path}`, this.baseUrl);
    for (const [key, value] of Object.entries(params)) {
      url.searchParams.set(key, value);
    }
    const response = await fetch(url);
    if (!response.ok) {
      let reason = response.statusText;
      try {
        const body = await response.json();
        reason = body.reason ?? reason;
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiError(response.status, reason);
    }
    return (await response.json()) as T;
  }

  window(grid: GridTag, center: AddressString, radius: number): Promise<WindowResponse> {
    return this.get<WindowResponse>("window", {
      grid,
      center,
      radius: String(radius),
    });
  }

  colors(center: AddressString, radius: number): Promise<ColorsResponse> {
    return this.get<ColorsResponse>("colors", { center, radius: String(radius) });
  }

  path(from: AddressString, to: AddressString): Promise<PathResponse> {
    return this.get<PathResponse>("path", { from, to });
  }

  neighbors(address: AddressString): Promise<NeighborsResponse> {
    return this.get<NeighborsResponse>("neighbors", { address });
  }
}
