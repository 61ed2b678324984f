/**
 * Page wiring: load the corpus, show the level list with solved badges,
 * and run the selected level against the rules engine.
 */

import { CorpusError, loadCorpus, type LevelData } from "./model.js";
import { renderLevel } from "./render.js";
import {
  ProgressStore,
  UiLevelState,
  createState,
  dragVertex,
  reset,
  restoreSolved,
  undo,
} from "./state.js";

const CORPUS_URL = "./data/levels.json";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showError(message: string): void {
  byId("error").textContent = message;
}

function levelLabel(level: LevelData, index: number): string {
  return `#${index + 1} · ${level.n} spots · ${level.edges.length} edges`
    + (level.unsolvable ? " · exhibition (unsolvable)" : "");
}

class App {
  private state: UiLevelState | null = null;
  private progress = new ProgressStore(window.localStorage);
  private svg = byId<HTMLElement>("board") as unknown as SVGSVGElement;

  constructor(private levels: LevelData[]) {
    byId("undo").addEventListener("click", () => this.apply(undo));
    byId("reset").addEventListener("click", () => this.apply(reset));
    byId("export").addEventListener("click", () => this.exportSolutions());
    this.renderList();
    if (levels.length === 0) {
      showError("the corpus is empty; nothing to play");
    } else {
      this.open(levels[0]);
    }
  }

  private renderList(): void {
    const list = byId<HTMLUListElement>("levels");
    list.replaceChildren();
    this.levels.forEach((level, index) => {
      const item = document.createElement("li");
      const button = document.createElement("button");
      button.textContent = levelLabel(level, index);
      button.dataset.levelId = level.id;
      if (this.progress.isSolved(level.id)) button.classList.add("solved");
      button.addEventListener("click", () => this.open(level));
      item.append(button);
      list.append(item);
    });
  }

  private open(level: LevelData): void {
    this.state = restoreSolved(createState(level), this.progress);
    this.draw();
  }

  private apply(step: (s: UiLevelState) => UiLevelState): void {
    if (!this.state) return;
    this.state = step(this.state);
    this.draw();
  }

  private draw(): void {
    const state = this.state;
    if (!state) return;
    renderLevel(this.svg, state, {
      onDrop: (vertex, spot) => {
        if (spot === null) {
          this.draw();  // snap back
          return;
        }
        const before = state.solved;
        this.state = dragVertex(state, vertex, spot);
        if (this.state.verdict.won) {
          this.progress.markSolved(state.level.id, this.state.placement);
          if (!before) this.renderList();
        }
        this.draw();
      },
    });
    byId("status").textContent = state.verdict.won
      ? "Solved! One spot vacant, every move legal, every edge kept."
      : `vacant: ${state.verdict.vacant.length} · ` +
        `out of reach: ${state.verdict.strayed.length} · ` +
        `broken edges: ${state.verdict.redEdges.length}`;
    byId("status").className = state.verdict.won ? "won" : "";
  }

  private exportSolutions(): void {
    const lines = this.progress.exportSolutions(
      this.levels.map((lv) => lv.id), "web-ui");
    const blob = new Blob([lines.join("\n") + (lines.length ? "\n" : "")],
                          { type: "application/jsonl" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "solutions.jsonl";
    link.click();
    URL.revokeObjectURL(link.href);
  }
}

loadCorpus(CORPUS_URL)
  .then((levels) => new App(levels))
  .catch((error: unknown) => {
    showError(error instanceof CorpusError
      ? `could not load levels — ${error.message}`
      : `could not load levels: ${String(error)}`);
  });
