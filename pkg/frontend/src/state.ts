/**
 * Game state: one level being played, its move history, and persistent
 * progress. All transitions are pure (they return a fresh state), which is
 * what the tests lean on; rendering subscribes to the result.
 */

import type { LevelData } from "./model.js";
import { checkWin, solutionLine, type Verdict } from "./rules.js";

export interface Move {
  vertex: number;
  from: number;
  to: number;
}

export interface UiLevelState {
  level: LevelData;
  /** placement[v] = spot vertex v currently occupies; always total. */
  placement: number[];
  selected: number | null;
  verdict: Verdict;
  solved: boolean;
  history: Move[];
}

export function createState(level: LevelData): UiLevelState {
  const placement = Array.from({ length: level.n }, (_, v) => v);
  return {
    level,
    placement,
    selected: null,
    verdict: checkWin(level, placement),
    solved: false,
    history: [],
  };
}

/**
 * Drop vertex v onto a spot. Wins are detected immediately; dropping on the
 * current spot is a no-op. Invalid spots are the renderer's business (drops
 * outside any spot snap back and never reach here).
 */
export function dragVertex(state: UiLevelState, vertex: number,
                           spot: number): UiLevelState {
  if (vertex < 0 || vertex >= state.level.n
      || spot < 0 || spot >= state.level.n) {
    throw new Error(`no such vertex or spot: ${vertex} -> ${spot}`);
  }
  const from = state.placement[vertex];
  if (from === spot) {
    return { ...state, selected: null };
  }
  const placement = state.placement.slice();
  placement[vertex] = spot;
  const verdict = checkWin(state.level, placement);
  return {
    ...state,
    placement,
    selected: null,
    verdict,
    solved: state.solved || verdict.won,
    history: [...state.history, { vertex, from, to: spot }],
  };
}

/** Exact inverse of the last drag; no-op on an empty history. */
export function undo(state: UiLevelState): UiLevelState {
  const last = state.history[state.history.length - 1];
  if (!last) return state;
  const placement = state.placement.slice();
  placement[last.vertex] = last.from;
  return {
    ...state,
    placement,
    selected: null,
    verdict: checkWin(state.level, placement),
    history: state.history.slice(0, -1),
  };
}

/** Back to the identity placement with an empty history. */
export function reset(state: UiLevelState): UiLevelState {
  return { ...createState(state.level), solved: state.solved };
}

// -- persistent progress -------------------------------------------------

/** The subset of the Web Storage API the store needs; injectable in tests. */
export interface KeyValueStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

interface SolvedEntry {
  spot: number[];
  ts: string;
}

/** Solved flags plus the winning placement, keyed by level id. */
export class ProgressStore {
  constructor(private store: KeyValueStore,
              private prefix = "graphfold.solved.") {}

  private key(levelId: string): string {
    return this.prefix + levelId;
  }

  markSolved(levelId: string, placement: number[],
             ts = new Date().toISOString()): void {
    const entry: SolvedEntry = { spot: placement.slice(), ts };
    this.store.setItem(this.key(levelId), JSON.stringify(entry));
  }

  isSolved(levelId: string): boolean {
    return this.store.getItem(this.key(levelId)) !== null;
  }

  solvedPlacement(levelId: string): number[] | null {
    const raw = this.store.getItem(this.key(levelId));
    if (raw === null) return null;
    try {
      return (JSON.parse(raw) as SolvedEntry).spot;
    } catch {
      return null;
    }
  }

  clear(levelId: string): void {
    this.store.removeItem(this.key(levelId));
  }

  /** Solution-file lines (the solver package's contract) for solved levels. */
  exportSolutions(levelIds: string[], solver: string): string[] {
    const lines: string[] = [];
    for (const id of levelIds) {
      const raw = this.store.getItem(this.key(id));
      if (raw === null) continue;
      try {
        const entry = JSON.parse(raw) as SolvedEntry;
        lines.push(solutionLine(id, entry.spot, solver, entry.ts));
      } catch {
        // unparseable entries are skipped rather than corrupting the export
      }
    }
    return lines;
  }
}

/** Restore a level to its stored winning placement, replayed as history. */
export function restoreSolved(state: UiLevelState,
                              progress: ProgressStore): UiLevelState {
  const placement = progress.solvedPlacement(state.level.id);
  if (!placement || placement.length !== state.level.n) {
    return progress.isSolved(state.level.id)
      ? { ...state, solved: true }
      : state;
  }
  let out: UiLevelState = { ...state, solved: true };
  for (let v = 0; v < placement.length; v++) {
    if (placement[v] !== out.placement[v]) {
      out = dragVertex(out, v, placement[v]);
    }
  }
  return out;
}
