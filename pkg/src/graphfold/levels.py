"""Playable levels: generation, layout, the win checker, and solution storage.

A level is a graph with display coordinates; a placement assigns every vertex
to the spot (vertex position) it currently occupies.  A placement wins exactly
when it is a reduction map of the level's graph, so the game's win condition
and the solver's acceptance test are the same function.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Sequence

from .catalog import MAX_ORDER, connected_class_keys
from . import graph6
from .graphs import Graph, is_connected
from .pixels import AdjacencyMode, PixelImage, from_pixels
from .reduction import diagnose_reduction, find_reduction, is_reducible

Placement = tuple[int, ...]
Position = tuple[float, float]


@dataclass(frozen=True)
class Level:
    """A displayed graph: stable id, vertices with spots, difficulty metadata."""

    id: str
    graph: Graph
    positions: tuple[Position, ...]
    solvable: bool = True

    def __post_init__(self):
        if len(self.positions) != self.graph.n:
            raise ValueError(
                f"level {self.id}: {len(self.positions)} positions for "
                f"{self.graph.n} vertices")
        if len(set(self.positions)) != self.graph.n:
            raise ValueError(f"level {self.id}: positions are not pairwise distinct")

    @property
    def rank(self) -> tuple[int, int]:
        """Difficulty order: vertex count, then edge count."""
        return (self.graph.n, self.graph.edge_count)


@dataclass(frozen=True)
class WinCheck:
    """Win verdict plus the cue sets a UI renders.

    `vacant` lists unoccupied spots, `strayed` the vertices parked outside
    their start's closed neighborhood, and `red_edges` the original edges
    whose endpoints are now neither stacked nor adjacent.
    """

    won: bool
    vacant: tuple[int, ...]
    strayed: tuple[int, ...]
    red_edges: tuple[tuple[int, int], ...]


def check_win(level: Level, placement: Sequence[int]) -> WinCheck:
    """Judge a placement; truth is delegated to the reduction checker."""
    report = diagnose_reduction(level.graph, placement)
    return WinCheck(report.ok, report.vacant, report.strayed, report.broken_edges)


# -- layout ------------------------------------------------------------------

_LAYOUT_ITERATIONS = 180
_MIN_SEPARATION = 0.05


def layout(g: Graph) -> tuple[Position, ...]:
    """Deterministic force-directed positions with a minimum separation.

    Pure float arithmetic from a fixed starting ring, so the same graph
    always lays out identically.  Coordinates land roughly in [-1, 1]^2.
    """
    n = g.n
    if n == 0:
        return ()
    if n == 1:
        return ((0.0, 0.0),)
    xs = [math.cos(2.0 * math.pi * v / n + 0.1 * v) for v in range(n)]
    ys = [math.sin(2.0 * math.pi * v / n + 0.1 * v) for v in range(n)]
    k = 2.0 / math.sqrt(n)
    temp = 0.6
    for _ in range(_LAYOUT_ITERATIONS):
        dx = [0.0] * n
        dy = [0.0] * n
        for u in range(n):
            for v in range(u + 1, n):
                ex = xs[u] - xs[v]
                ey = ys[u] - ys[v]
                dist = math.hypot(ex, ey) or 1e-9
                push = k * k / dist
                if g.masks[u] >> v & 1:
                    push -= dist * dist / k
                fx = ex / dist * push
                fy = ey / dist * push
                dx[u] += fx
                dy[u] += fy
                dx[v] -= fx
                dy[v] -= fy
        for v in range(n):
            mag = math.hypot(dx[v], dy[v]) or 1e-9
            step = min(mag, temp)
            xs[v] = max(-3.0, min(3.0, xs[v] + dx[v] / mag * step))
            ys[v] = max(-3.0, min(3.0, ys[v] + dy[v] / mag * step))
        temp *= 0.97
    _separate(xs, ys)
    cx = sum(xs) / n
    cy = sum(ys) / n
    xs = [x - cx for x in xs]
    ys = [y - cy for y in ys]
    radius = max(max(map(abs, xs)), max(map(abs, ys))) or 1.0
    return tuple((round(x / radius, 4), round(y / radius, 4)) for x, y in zip(xs, ys))


def _separate(xs: list[float], ys: list[float]) -> None:
    """Push near-coincident points apart (deterministic tie direction)."""
    n = len(xs)
    for _ in range(60):
        crowded = False
        for u in range(n):
            for v in range(u + 1, n):
                ex = xs[u] - xs[v]
                ey = ys[u] - ys[v]
                dist = math.hypot(ex, ey)
                if dist >= _MIN_SEPARATION:
                    continue
                crowded = True
                if dist < 1e-9:
                    ang = 0.7 * (u + 1) + 2.1 * (v + 1)
                    ex, ey, dist = math.cos(ang), math.sin(ang), 1.0
                shove = (_MIN_SEPARATION - dist) / 2.0 + 1e-4
                xs[u] += ex / dist * shove
                ys[u] += ey / dist * shove
                xs[v] -= ex / dist * shove
                ys[v] -= ey / dist * shove
        if not crowded:
            return


# -- generation --------------------------------------------------------------

def level_id(canonical: str) -> str:
    """Stable id derived from the canonical key of the level's graph."""
    g = graph6.decode(canonical)
    digest = hashlib.sha1(canonical.encode("ascii")).hexdigest()[:10]
    return f"n{g.n}-{digest}"


def generate_levels(orders: Iterable[int], limit: int | None = None,
                    include_irreducible: bool = False) -> list[Level]:
    """Deterministic level corpus: reducible connected classes, laid out.

    `limit` caps the number of levels per order (taken in canonical-key
    order).  With `include_irreducible`, unsolvable classes are added too,
    marked `solvable=False`, for exhibition play.
    """
    wanted = sorted(set(orders))
    for n in wanted:
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"level orders must be within 1..{MAX_ORDER}, got {n}")
    levels: list[Level] = []
    for n in wanted:
        taken = 0
        for key in connected_class_keys(n):
            if limit is not None and taken >= limit:
                break
            g = graph6.decode(key)
            solvable = is_reducible(g)
            if not solvable and not include_irreducible:
                continue
            levels.append(Level(level_id(key), g, layout(g), solvable))
            taken += 1
    levels.sort(key=lambda lv: (lv.rank, lv.id))
    return levels


def level_from_pixels(image: PixelImage, mode: AdjacencyMode, id: str) -> Level:
    """A level straight from a pixel image, reusing the lattice coordinates."""
    g = from_pixels(image, mode)
    if not is_connected(g):
        raise ValueError(f"level {id}: pixel graph is disconnected under {mode.name}")
    positions = tuple((float(x), float(y)) for x, y in image.sorted_points())
    return Level(id, g, positions, solvable=is_reducible(g))


# -- level file contract ------------------------------------------------------

def levels_document(levels: Sequence[Level]) -> dict:
    doc_levels = []
    for lv in levels:
        entry: dict = {
            "id": lv.id,
            "n": lv.graph.n,
            "edges": [[u, v] for u, v in lv.graph.edges()],
            "positions": [[x, y] for x, y in lv.positions],
        }
        if not lv.solvable:
            entry["unsolvable"] = True
        doc_levels.append(entry)
    return {"levels": doc_levels}


def write_levels(levels: Sequence[Level], path: str | os.PathLike) -> None:
    """Write the level-file JSON contract (stable bytes across runs)."""
    text = json.dumps(levels_document(levels), indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")


def read_levels(path: str | os.PathLike) -> list[Level]:
    """Load and validate a level file; duplicate ids are rejected."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise OSError(f"cannot read level file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("levels"), list):
        raise ValueError(f"{path}: expected an object with a 'levels' array")
    levels = []
    seen_ids = set()
    for i, entry in enumerate(doc["levels"]):
        where = f"{path}: levels[{i}]"
        if not isinstance(entry, dict):
            raise ValueError(f"{where}: expected an object")
        for fieldname in ("id", "n", "edges", "positions"):
            if fieldname not in entry:
                raise ValueError(f"{where}: missing field '{fieldname}'")
        lid = entry["id"]
        if not isinstance(lid, str) or not lid:
            raise ValueError(f"{where}: field 'id' must be a nonempty string")
        if lid in seen_ids:
            raise ValueError(f"{where}: duplicate level id '{lid}'")
        seen_ids.add(lid)
        n = entry["n"]
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"{where}: field 'n' must be a nonnegative integer")
        try:
            g = Graph(n, [tuple(e) for e in entry["edges"]])
        except (TypeError, ValueError) as exc:
            raise ValueError(f"{where}: field 'edges' is invalid: {exc}") from exc
        positions = entry["positions"]
        if not isinstance(positions, list):
            raise ValueError(f"{where}: field 'positions' must be an array")
        try:
            pos = tuple((float(p[0]), float(p[1])) for p in positions)
        except (TypeError, IndexError) as exc:
            raise ValueError(f"{where}: field 'positions' is invalid: {exc}") from exc
        solvable = not entry.get("unsolvable", False)
        try:
            levels.append(Level(lid, g, pos, solvable))
        except ValueError as exc:
            raise ValueError(f"{where}: {exc}") from exc
    return levels


# -- solution store ------------------------------------------------------------

@dataclass(frozen=True)
class SolutionRecord:
    level: str
    spot: Placement
    solver: str
    ts: str


class RejectedSolution(ValueError):
    """A placement that does not win cannot be recorded."""

    def __init__(self, level_id: str, check: WinCheck):
        reasons = []
        if not check.vacant:
            reasons.append("no spot is vacant")
        if check.strayed:
            reasons.append(f"vertices out of reach: {list(check.strayed)}")
        if check.red_edges:
            reasons.append(f"broken adjacencies: {list(check.red_edges)}")
        super().__init__(f"placement for level {level_id} does not win: "
                         + "; ".join(reasons))
        self.check = check


class SolutionStore:
    """Append-only line-delimited JSON store of verified wins."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def record(self, level: Level, placement: Sequence[int], solver: str,
               ts: str | None = None) -> SolutionRecord:
        check = check_win(level, placement)
        if not check.won:
            raise RejectedSolution(level.id, check)
        rec = SolutionRecord(
            level=level.id,
            spot=tuple(int(s) for s in placement),
            solver=solver,
            ts=ts or datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )
        line = json.dumps(
            {"level": rec.level, "spot": list(rec.spot),
             "solver": rec.solver, "ts": rec.ts})
        try:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
        except OSError as exc:
            raise OSError(f"cannot append solution to {self.path}: {exc}") from exc
        return rec

    def load(self, level_id: str) -> list[SolutionRecord]:
        if not self.path.exists():
            return []
        out = []
        try:
            text = self.path.read_text(encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot read solutions from {self.path}: {exc}") from exc
        for lineno, raw in enumerate(text.splitlines(), start=1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{self.path}:{lineno}: bad record: {exc}") from exc
            if obj.get("level") == level_id:
                out.append(SolutionRecord(
                    obj["level"], tuple(obj["spot"]), obj.get("solver", ""),
                    obj.get("ts", "")))
        return out


# -- conformance fixtures -------------------------------------------------------

def conformance_fixtures(levels: Sequence[Level], per_level: int = 8,
                         seed: int = 0) -> list[dict]:
    """Level/placement/verdict triples for cross-checking a re-implemented
    checker (the web UI) against this one.

    Per level: the solver's witness (a win), the identity placement (fails
    only vacancy), targeted placements that fail only locality or only
    adjacency where the graph allows it, and seeded random placements.
    """
    import random

    rng = random.Random(seed)
    fixtures: list[dict] = []

    def add(level: Level, placement: Sequence[int]) -> None:
        chk = check_win(level, placement)
        fixtures.append({
            "level": level.id,
            "spot": list(placement),
            "win": chk.won,
            "vacant": list(chk.vacant),
            "strayed": list(chk.strayed),
            "red": [[u, v] for u, v in chk.red_edges],
        })

    for lv in levels:
        g = lv.graph
        n = g.n
        verdict = find_reduction(g)
        if verdict.reducible:
            add(lv, verdict.witness)
        add(lv, tuple(range(n)))  # identity: fails vacancy alone
        closed = [sorted({v, *g.neighbors(v)}) for v in range(n)]
        if verdict.reducible:
            wit = verdict.witness
            done = False
            for w in range(n):
                for a in closed[w]:
                    if a == wit[w]:
                        continue
                    probe = list(wit)
                    probe[w] = a
                    chk = check_win(lv, probe)
                    if not chk.won and chk.vacant and not chk.strayed and chk.red_edges:
                        add(lv, probe)  # fails adjacency alone
                        done = True
                        break
                if done:
                    break
        done = False
        for w in range(n):
            far = [a for a in range(n) if a not in closed[w]]
            for a in far:
                probe = list(range(n))
                probe[w] = a
                chk = check_win(lv, probe)
                if not chk.won and chk.vacant and chk.strayed and not chk.red_edges:
                    add(lv, probe)  # fails locality alone
                    done = True
                    break
            if done:
                break
        for t in range(per_level):
            if t % 2 == 0:
                probe = [rng.randrange(n) for _ in range(n)]
            else:
                probe = [rng.choice(closed[v]) for v in range(n)]
            add(lv, probe)
    return fixtures


def fixture_coverage(fixtures: Sequence[dict]) -> dict[str, int]:
    """Tallies used to assert a fixture set exercises every verdict shape."""
    cover = {
        "total": len(fixtures),
        "wins": 0,
        "stacked_wins": 0,
        "fail_vacancy_only": 0,
        "fail_locality_only": 0,
        "fail_adjacency_only": 0,
    }
    for fx in fixtures:
        vacancy_ok = bool(fx["vacant"])
        locality_bad = bool(fx["strayed"])
        adjacency_bad = bool(fx["red"])
        if fx["win"]:
            cover["wins"] += 1
            if len(set(fx["spot"])) < len(fx["spot"]):
                cover["stacked_wins"] += 1
        elif not vacancy_ok and not locality_bad and not adjacency_bad:
            cover["fail_vacancy_only"] += 1
        elif vacancy_ok and locality_bad and not adjacency_bad:
            cover["fail_locality_only"] += 1
        elif vacancy_ok and not locality_bad and adjacency_bad:
            cover["fail_adjacency_only"] += 1
    return cover


def write_fixtures(fixtures: Sequence[dict], path: str | os.PathLike) -> None:
    text = json.dumps({"fixtures": list(fixtures)}, indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")
