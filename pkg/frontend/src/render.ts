/**
 * SVG rendering and pointer interaction. Spots are fixed rings at each
 * vertex's home position; vertices are discs that get dragged spot to spot.
 * Stacked vertices fan out slightly so each stays visible and clickable.
 */

import type { LevelData } from "./model.js";
import type { UiLevelState } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const VIEW = 560;
const MARGIN = 60;
const SPOT_RADIUS = 16;
const VERTEX_RADIUS = 12;
const STACK_OFFSET = 7;

export interface RenderCallbacks {
  onDrop(vertex: number, spot: number | null): void;
}

interface Transform {
  x(px: number): number;
  y(py: number): number;
}

function fitTransform(level: LevelData): Transform {
  const xs = level.positions.map((p) => p[0]);
  const ys = level.positions.map((p) => p[1]);
  const lo = [Math.min(...xs, -1), Math.min(...ys, -1)];
  const hi = [Math.max(...xs, 1), Math.max(...ys, 1)];
  const span = Math.max(hi[0] - lo[0], hi[1] - lo[1]) || 1;
  const scale = (VIEW - 2 * MARGIN) / span;
  return {
    x: (px) => MARGIN + (px - lo[0]) * scale,
    // level coordinates are y-up, screens are y-down
    y: (py) => VIEW - MARGIN - (py - lo[1]) * scale,
  };
}

function el<K extends keyof SVGElementTagNameMap>(
    name: K, attrs: Record<string, string>): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

/** Screen coordinates of each vertex, fanning out stacks. */
function vertexScreenPositions(state: UiLevelState,
                               t: Transform): [number, number][] {
  const byShare = new Map<number, number[]>();
  state.placement.forEach((spot, v) => {
    const group = byShare.get(spot) ?? [];
    group.push(v);
    byShare.set(spot, group);
  });
  const out: [number, number][] = new Array(state.level.n);
  for (const [spot, group] of byShare) {
    const cx = t.x(state.level.positions[spot][0]);
    const cy = t.y(state.level.positions[spot][1]);
    group.forEach((v, k) => {
      if (group.length === 1) {
        out[v] = [cx, cy];
        return;
      }
      const angle = (2 * Math.PI * k) / group.length - Math.PI / 2;
      out[v] = [cx + STACK_OFFSET * Math.cos(angle),
                cy + STACK_OFFSET * Math.sin(angle)];
    });
  }
  return out;
}

export function renderLevel(svg: SVGSVGElement, state: UiLevelState,
                            callbacks: RenderCallbacks): void {
  svg.setAttribute("viewBox", `0 0 ${VIEW} ${VIEW}`);
  svg.replaceChildren();
  const t = fitTransform(state.level);
  const spots = state.level.positions.map(
    ([px, py]) => [t.x(px), t.y(py)] as [number, number]);
  const vertices = vertexScreenPositions(state, t);
  const red = new Set(state.verdict.redEdges.map(([u, v]) => `${u},${v}`));

  // origin cues under everything else
  for (const v of state.verdict.originMarkers) {
    svg.append(el("line", {
      x1: String(vertices[v][0]), y1: String(vertices[v][1]),
      x2: String(spots[v][0]), y2: String(spots[v][1]),
      class: "origin-line",
    }));
  }
  for (const [u, v] of state.level.edges) {
    const broken = red.has(`${u},${v}`);
    svg.append(el("line", {
      x1: String(vertices[u][0]), y1: String(vertices[u][1]),
      x2: String(vertices[v][0]), y2: String(vertices[v][1]),
      class: broken ? "edge red" : "edge",
    }));
  }
  spots.forEach(([cx, cy], spot) => {
    const vacant = state.verdict.vacant.includes(spot);
    svg.append(el("circle", {
      cx: String(cx), cy: String(cy), r: String(SPOT_RADIUS),
      class: vacant ? "spot vacant" : "spot",
      "data-spot": String(spot),
    }));
  });
  vertices.forEach(([cx, cy], v) => {
    const disc = el("circle", {
      cx: String(cx), cy: String(cy), r: String(VERTEX_RADIUS),
      class: state.verdict.strayed.includes(v) ? "vertex strayed" : "vertex",
      "data-vertex": String(v),
    });
    attachDrag(svg, disc, v, spots, callbacks);
    svg.append(disc);
  });
}

function attachDrag(svg: SVGSVGElement, disc: SVGCircleElement, vertex: number,
                    spots: [number, number][],
                    callbacks: RenderCallbacks): void {
  disc.addEventListener("pointerdown", (down) => {
    down.preventDefault();
    disc.setPointerCapture(down.pointerId);
    disc.classList.add("dragging");
    const toLocal = (event: PointerEvent): [number, number] => {
      const rect = svg.getBoundingClientRect();
      return [((event.clientX - rect.left) / rect.width) * VIEW,
              ((event.clientY - rect.top) / rect.height) * VIEW];
    };
    const move = (event: PointerEvent) => {
      const [px, py] = toLocal(event);
      disc.setAttribute("cx", String(px));
      disc.setAttribute("cy", String(py));
    };
    const up = (event: PointerEvent) => {
      disc.removeEventListener("pointermove", move);
      disc.removeEventListener("pointerup", up);
      disc.classList.remove("dragging");
      const [px, py] = toLocal(event);
      let hit: number | null = null;
      spots.forEach(([sx, sy], spot) => {
        if (Math.hypot(px - sx, py - sy) <= SPOT_RADIUS * 1.6) hit = spot;
      });
      // misses snap back: the caller re-renders from unchanged state
      callbacks.onDrop(vertex, hit);
    };
    disc.addEventListener("pointermove", move);
    disc.addEventListener("pointerup", up);
  });
}
