/** Minimal typed client for the session service. No algebra happens here:
 * the client moves JSON back and forth and renders what the server says. */

import type { GraphJson, PresetInfo, SeedJson, SessionState } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
    public payload: Record<string, unknown> = {},
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
      init.headers = { "Content-Type": "application/json" };
    }
    const resp = await this.fetchFn(this.baseUrl + path, init);
    const payload = (await resp.json()) as Record<string, unknown>;
    if (!resp.ok) {
      const message = typeof payload.error === "string" ? payload.error : resp.statusText;
      throw new ApiError(resp.status, message, payload);
    }
    return payload as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("GET", "/health");
  }

  async presets(): Promise<PresetInfo[]> {
    const out = await this.request<{ presets: PresetInfo[] }>("GET", "/presets");
    return out.presets;
  }

  async presetSeed(id: string): Promise<SeedJson> {
    const out = await this.request<{ seed: SeedJson }>("GET", `/presets/${id}`);
    return out.seed;
  }

  createFromPreset(id: string): Promise<SessionState> {
    return this.request("POST", "/sessions", { preset: id });
  }

  createFromSeed(seed: unknown): Promise<SessionState> {
    return this.request("POST", "/sessions", { seed });
  }

  state(id: string): Promise<SessionState> {
    return this.request("GET", `/sessions/${id}`);
  }

  mutate(id: string, k: number): Promise<SessionState> {
    return this.request("POST", `/sessions/${id}/mutate`, { k });
  }

  undo(id: string): Promise<SessionState> {
    return this.request("POST", `/sessions/${id}/undo`);
  }

  graph(id: string, maxVertices = 500, maxDepth = 10): Promise<GraphJson> {
    return this.request(
      "GET",
      `/sessions/${id}/graph?max_vertices=${maxVertices}&max_depth=${maxDepth}`,
    );
  }
}
