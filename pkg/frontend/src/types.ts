/** Wire types of the session service. Directions are 1-based on the wire. */

export interface SeedJson {
  v: number;
  vars: string[];
  ex: number[];
  B: number[][];
  cluster: string[];
}

export interface ExchangePreview {
  k: number;
  variable: string;
  delta: number[];
}

export interface SessionState {
  v: number;
  id: string;
  initial: SeedJson;
  seed: SeedJson;
  history: number[];
  ex: number[];
  cluster: string[];
  delta: number[][];
  acyclic: boolean;
  exchange_previews: ExchangePreview[];
}

export interface GraphVertex {
  id: string;
  seed: SeedJson;
}

export interface GraphEdge {
  a: string;
  k: number;
  b: string;
  k_b?: number;
}

export interface GraphVerdict {
  kind: "finite" | "exceeded-cap";
  vertices: number;
  max_vertices: number;
  max_depth: number;
  depth_reached: number;
  depth_profile: number[];
}

export interface GraphJson {
  v: number;
  vertices: GraphVertex[];
  edges: GraphEdge[];
  verdict: GraphVerdict;
  cluster_variable_count: number;
  current?: string;
}

export interface PresetInfo {
  id: string;
  label: string;
  m: number;
  n: number;
}
