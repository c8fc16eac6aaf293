/** Derive the quiver picture of an extended exchange matrix.
 *
 * Faithful to the matrix: a directed edge i -> j is shown iff b_ij > 0, and
 * a valued label (b_ij, -b_ji) appears when the two magnitudes differ (the
 * skew-symmetrizable case). Exchangeable vertices render as circles, frozen
 * ones as squares. All data comes straight from the seed JSON. */

import type { SeedJson } from "./types.js";

export interface QuiverVertex {
  /** 1-based position in the extended cluster */
  position: number;
  label: string;
  frozen: boolean;
  x: number;
  y: number;
}

export interface QuiverEdge {
  from: number;
  to: number;
  /** multiplicity as seen from `from` (= b_{from,to} > 0) */
  forward: number;
  /** multiplicity back (= -b_{to,from}) when both endpoints are exchangeable */
  backward?: number;
  label: string;
}

export interface QuiverView {
  vertices: QuiverVertex[];
  edges: QuiverEdge[];
}

function edgeLabel(forward: number, backward?: number): string {
  if (backward === undefined) {
    return forward === 1 ? "" : String(forward);
  }
  if (forward === backward) {
    return forward === 1 ? "" : String(forward);
  }
  return `(${forward},${backward})`;
}

/** Column index of exchangeable position p (1-based) in the B matrix. */
function columnOf(seed: SeedJson, p: number): number {
  return seed.ex.indexOf(p);
}

export function deriveQuiver(seed: SeedJson, radius = 160): QuiverView {
  const m = seed.vars.length;
  const exSet = new Set(seed.ex);
  const vertices: QuiverVertex[] = [];
  for (let p = 1; p <= m; p++) {
    const angle = (2 * Math.PI * (p - 1)) / m - Math.PI / 2;
    vertices.push({
      position: p,
      label: seed.cluster[p - 1] ?? seed.vars[p - 1] ?? `x${p}`,
      frozen: !exSet.has(p),
      x: Math.round(radius * Math.cos(angle) * 100) / 100,
      y: Math.round(radius * Math.sin(angle) * 100) / 100,
    });
  }

  const edges: QuiverEdge[] = [];
  for (let i = 1; i <= m; i++) {
    for (const q of seed.ex) {
      const col = columnOf(seed, q);
      const b = seed.B[i - 1]?.[col];
      if (b === undefined || b === 0 || i === q) continue;
      if (exSet.has(i)) {
        // exchangeable pair: emit only the positive orientation; the
        // reverse entry supplies the valued label
        if (b <= 0) continue;
        const back = seed.B[q - 1]?.[columnOf(seed, i)];
        const backward = back === undefined ? undefined : -back;
        edges.push({ from: i, to: q, forward: b, backward, label: edgeLabel(b, backward) });
      } else if (b > 0) {
        // frozen row i points at exchangeable q
        edges.push({ from: i, to: q, forward: b, label: edgeLabel(b) });
      } else {
        // negative frozen entry: the arrow runs from q into the frozen row
        edges.push({ from: q, to: i, forward: -b, label: edgeLabel(-b) });
      }
    }
  }
  edges.sort((e1, e2) => e1.from - e2.from || e1.to - e2.to);
  return { vertices, edges };
}
