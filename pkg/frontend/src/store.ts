/** UI state container. All algebra lives server-side: the store only holds
 * the latest server responses, the history trail, and derived flags. Every
 * mutation awaits the server before the state changes (no optimistic UI). */

import { ApiClient, ApiError } from "./api.js";
import {
  HistoryTrail,
  applyMutation,
  applyUndo,
  consistentWithServer,
  emptyTrail,
} from "./history.js";
import { mutationPath } from "./force.js";
import type { GraphJson, SessionState } from "./types.js";

export interface StoreState {
  session: SessionState | null;
  initial: SessionState | null;
  trail: HistoryTrail;
  graph: GraphJson | null;
  busy: boolean;
  notice: string;
  returnedToStart: boolean;
}

function sameClusterSet(a: string[], b: string[]): boolean {
  if (a.length !== b.length) return false;
  const sa = [...a].sort();
  const sb = [...b].sort();
  return sa.every((v, i) => v === sb[i]);
}

export class ExplorerStore {
  session: SessionState | null = null;
  initial: SessionState | null = null;
  trail: HistoryTrail = emptyTrail;
  graph: GraphJson | null = null;
  busy = false;
  notice = "";
  private listeners: Array<(s: StoreState) => void> = [];

  constructor(private api: ApiClient) {}

  subscribe(listener: (s: StoreState) => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  get returnedToStart(): boolean {
    if (!this.session || !this.initial) return false;
    return (
      this.session.history.length > 0 &&
      sameClusterSet(this.session.cluster, this.initial.cluster)
    );
  }

  get state(): StoreState {
    return {
      session: this.session,
      initial: this.initial,
      trail: this.trail,
      graph: this.graph,
      busy: this.busy,
      notice: this.notice,
      returnedToStart: this.returnedToStart,
    };
  }

  private emit(): void {
    const snapshot = this.state;
    for (const listener of this.listeners) listener(snapshot);
  }

  private async withBusy<T>(work: () => Promise<T>): Promise<T | undefined> {
    this.busy = true;
    this.notice = "";
    this.emit();
    try {
      return await work();
    } catch (err) {
      this.notice = err instanceof ApiError ? `server: ${err.message}` : String(err);
      return undefined;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  async loadPreset(id: string): Promise<void> {
    await this.withBusy(async () => {
      const state = await this.api.createFromPreset(id);
      this.adoptFresh(state);
    });
  }

  async loadSeedJson(text: string): Promise<void> {
    let parsed: unknown;
    try {
      parsed = JSON.parse(text);
    } catch (err) {
      this.notice = `seed JSON: ${(err as Error).message}`;
      this.emit();
      return;
    }
    await this.withBusy(async () => {
      const state = await this.api.createFromSeed(parsed);
      this.adoptFresh(state);
    });
  }

  private adoptFresh(state: SessionState): void {
    this.session = state;
    this.initial = state;
    this.trail = emptyTrail;
    this.graph = null;
  }

  /** Click on a quiver vertex (1-based position). Frozen vertices are a
   * no-op with an explanatory notice. */
  async clickMutate(position: number): Promise<void> {
    const session = this.session;
    if (!session || this.busy) return;
    if (!session.ex.includes(position)) {
      this.notice = `vertex ${position} is frozen; only ${session.ex.join(", ")} mutate`;
      this.emit();
      return;
    }
    await this.withBusy(async () => {
      const state = await this.api.mutate(session.id, position);
      this.session = state;
      this.trail = applyMutation(this.trail, position);
      this.graph = null;
    });
  }

  async undo(): Promise<void> {
    const session = this.session;
    if (!session || this.busy || session.history.length === 0) return;
    await this.withBusy(async () => {
      const state = await this.api.undo(session.id);
      this.session = state;
      this.trail = applyUndo(this.trail);
      this.graph = null;
    });
  }

  async exploreGraph(maxVertices = 500, maxDepth = 10): Promise<void> {
    const session = this.session;
    if (!session) return;
    await this.withBusy(async () => {
      this.graph = await this.api.graph(session.id, maxVertices, maxDepth);
    });
  }

  /** Navigate to a clicked graph vertex by replaying a path of mutations.
   * Labels on far edges are relative to the server's stored representatives,
   * so after replaying the graph is refetched and the landing spot checked. */
  async navigateTo(vertexId: string): Promise<void> {
    const session = this.session;
    const graph = this.graph;
    if (!session || !graph || !graph.current || this.busy) return;
    const path = mutationPath(graph.edges, graph.current, vertexId);
    if (path === null) {
      this.notice = `no path to ${vertexId} in the enumerated graph`;
      this.emit();
      return;
    }
    await this.withBusy(async () => {
      let state = this.session!;
      for (const k of path) {
        state = await this.api.mutate(state.id, k);
        this.trail = applyMutation(this.trail, k);
      }
      this.session = state;
      this.graph = await this.api.graph(
        state.id,
        graph.verdict.max_vertices,
        graph.verdict.max_depth,
      );
      if (this.graph.current !== vertexId) {
        this.notice = "landed on a relabeled twin of the clicked vertex";
      }
    });
  }

  trailConsistent(): boolean {
    if (!this.session) return this.trail.pointer === 0;
    return consistentWithServer(this.trail, this.session.history);
  }
}
