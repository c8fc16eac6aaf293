/** A small deterministic force layout for the exchange-graph view.
 * Spring-electric model with cooling; seeded so layouts are reproducible. */

export interface LayoutNode {
  id: string;
  x: number;
  y: number;
}

export interface LayoutLink {
  a: string;
  b: string;
}

/** mulberry32: tiny seeded PRNG, good enough for initial placement */
export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function initialPlacement(ids: string[], width: number, height: number, seed = 7): LayoutNode[] {
  const rand = mulberry32(seed);
  return ids.map((id) => ({
    id,
    x: width * (0.2 + 0.6 * rand()),
    y: height * (0.2 + 0.6 * rand()),
  }));
}

export interface ForceOptions {
  width: number;
  height: number;
  iterations: number;
  spring: number;
}

export function runLayout(
  nodes: LayoutNode[],
  links: LayoutLink[],
  opts: Partial<ForceOptions> = {},
): LayoutNode[] {
  const { width = 640, height = 480, iterations = 150 } = opts;
  const n = nodes.length;
  if (n === 0) return [];
  const k = opts.spring ?? Math.sqrt((width * height) / n) / 2;
  const index = new Map(nodes.map((node, i) => [node.id, i]));
  const xs = nodes.map((node) => node.x);
  const ys = nodes.map((node) => node.y);

  for (let it = 0; it < iterations; it++) {
    const temp = (0.1 * Math.min(width, height) * (iterations - it)) / iterations;
    const dx = new Array<number>(n).fill(0);
    const dy = new Array<number>(n).fill(0);

    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let vx = xs[i]! - xs[j]!;
        let vy = ys[i]! - ys[j]!;
        let d2 = vx * vx + vy * vy;
        if (d2 < 1e-6) {
          vx = (i - j) * 0.01;
          vy = 0.013 * (i + 1);
          d2 = vx * vx + vy * vy;
        }
        const rep = (k * k) / d2;
        dx[i]! += vx * rep;
        dy[i]! += vy * rep;
        dx[j]! -= vx * rep;
        dy[j]! -= vy * rep;
      }
    }
    for (const link of links) {
      const i = index.get(link.a);
      const j = index.get(link.b);
      if (i === undefined || j === undefined || i === j) continue;
      const vx = xs[i]! - xs[j]!;
      const vy = ys[i]! - ys[j]!;
      const d = Math.sqrt(vx * vx + vy * vy) || 1e-3;
      const att = (d * d) / k / d;
      dx[i]! -= vx * att;
      dy[i]! -= vy * att;
      dx[j]! += vx * att;
      dy[j]! += vy * att;
    }
    for (let i = 0; i < n; i++) {
      const d = Math.sqrt(dx[i]! * dx[i]! + dy[i]! * dy[i]!) || 1e-9;
      const step = Math.min(d, temp);
      xs[i]! += (dx[i]! / d) * step;
      ys[i]! += (dy[i]! / d) * step;
      xs[i] = Math.min(width - 20, Math.max(20, xs[i]!));
      ys[i] = Math.min(height - 20, Math.max(20, ys[i]!));
    }
  }
  return nodes.map((node, i) => ({ id: node.id, x: xs[i]!, y: ys[i]! }));
}

/** Breadth-first path between two vertices of the graph JSON edge list;
 * used to navigate the session to a clicked vertex by replaying mutations.
 * Returns the list of direction labels as seen from each step's source. */
export function mutationPath(
  edges: { a: string; k: number; b: string; k_b?: number }[],
  from: string,
  to: string,
): number[] | null {
  if (from === to) return [];
  const adj = new Map<string, { next: string; k: number }[]>();
  const push = (s: string, t: string, k: number) => {
    if (!adj.has(s)) adj.set(s, []);
    adj.get(s)!.push({ next: t, k });
  };
  for (const e of edges) {
    push(e.a, e.b, e.k);
    push(e.b, e.a, e.k_b ?? e.k);
  }
  const prev = new Map<string, { from: string; k: number }>();
  const queue = [from];
  const seen = new Set([from]);
  while (queue.length) {
    const v = queue.shift()!;
    for (const { next, k } of adj.get(v) ?? []) {
      if (seen.has(next)) continue;
      seen.add(next);
      prev.set(next, { from: v, k });
      if (next === to) {
        const path: number[] = [];
        let cur = to;
        while (cur !== from) {
          const step = prev.get(cur)!;
          path.push(step.k);
          cur = step.from;
        }
        return path.reverse();
      }
      queue.push(next);
    }
  }
  return null;
}
