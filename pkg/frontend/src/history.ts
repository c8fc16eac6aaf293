/** The client-side history trail: applied directions with an undo pointer.
 * The server history is authoritative; the trail must always agree with it
 * on the first `pointer` entries. Pure reducers, easy to test. */

export interface HistoryTrail {
  entries: number[];
  pointer: number;
}

export const emptyTrail: HistoryTrail = { entries: [], pointer: 0 };

export function applyMutation(trail: HistoryTrail, k: number): HistoryTrail {
  const entries = [...trail.entries.slice(0, trail.pointer), k];
  return { entries, pointer: entries.length };
}

export function applyUndo(trail: HistoryTrail): HistoryTrail {
  if (trail.pointer === 0) return trail;
  return { entries: trail.entries, pointer: trail.pointer - 1 };
}

export function activeEntries(trail: HistoryTrail): number[] {
  return trail.entries.slice(0, trail.pointer);
}

export function consistentWithServer(trail: HistoryTrail, serverHistory: number[]): boolean {
  const active = activeEntries(trail);
  return (
    active.length === serverHistory.length &&
    active.every((k, i) => k === serverHistory[i])
  );
}
