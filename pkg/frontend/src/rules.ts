/**
 * The win rules, re-implemented over the level contract.
 *
 * A placement maps each vertex to the spot it currently occupies. It wins
 * when (1) some spot is vacant, (2) every vertex sits on its own spot or a
 * neighboring one, and (3) every original edge still connects equal or
 * adjacent spots. Red edges are the rule-3 violations a player sees; origin
 * markers point each displaced vertex back to where it started.
 *
 * Deliberately independent of the solver package: conformance is enforced
 * by replaying its exported fixtures in the tests, not by sharing code.
 */

import type { Edge, LevelData } from "./model.js";

export interface Cues {
  /** Spots no vertex occupies; rule 1 wants at least one. */
  vacant: number[];
  /** Vertices parked outside their start's closed neighborhood (rule 2). */
  strayed: number[];
  /** Original edges whose endpoints are neither stacked nor adjacent. */
  redEdges: Edge[];
  /** Vertices away from home: each gets a dotted line to its origin. */
  originMarkers: number[];
}

export interface Verdict extends Cues {
  won: boolean;
}

function adjacencySets(level: LevelData): Set<number>[] {
  const adj: Set<number>[] = Array.from({ length: level.n }, () => new Set());
  for (const [u, v] of level.edges) {
    adj[u].add(v);
    adj[v].add(u);
  }
  return adj;
}

export function checkWin(level: LevelData, placement: number[]): Verdict {
  if (placement.length !== level.n) {
    throw new Error(
      `placement has ${placement.length} spots, level has ${level.n}`);
  }
  const adj = adjacencySets(level);
  const occupied = new Set(placement);
  const vacant: number[] = [];
  for (let spot = 0; spot < level.n; spot++) {
    if (!occupied.has(spot)) vacant.push(spot);
  }
  const strayed: number[] = [];
  const originMarkers: number[] = [];
  for (let v = 0; v < level.n; v++) {
    const spot = placement[v];
    if (spot !== v) {
      originMarkers.push(v);
      if (!adj[v].has(spot)) strayed.push(v);
    }
  }
  const redEdges: Edge[] = [];
  for (const [u, v] of level.edges) {
    const a = placement[u];
    const b = placement[v];
    if (a !== b && !adj[a].has(b)) redEdges.push([u, v]);
  }
  return {
    won: vacant.length > 0 && strayed.length === 0 && redEdges.length === 0,
    vacant,
    strayed,
    redEdges,
    originMarkers,
  };
}

/** Solution-file line in the solver package's contract. */
export function solutionLine(levelId: string, placement: number[],
                             solver: string, ts: string): string {
  return JSON.stringify({ level: levelId, spot: placement, solver, ts });
}
