/**
 * The level-file contract shared with the solver package, plus strict
 * parsing. Errors name the offending field so a bad corpus is debuggable
 * from the UI's error screen.
 */

export type Edge = [number, number];
export type Point = [number, number];

export interface LevelData {
  id: string;
  n: number;
  edges: Edge[];
  positions: Point[];
  /** Exhibition levels with no winning placement; marked by the generator. */
  unsolvable?: boolean;
}

export interface FixtureData {
  level: string;
  spot: number[];
  win: boolean;
  vacant: number[];
  strayed: number[];
  red: Edge[];
}

export class CorpusError extends Error {}

function fail(where: string, message: string): never {
  throw new CorpusError(`${where}: ${message}`);
}

function parseLevel(raw: unknown, where: string): LevelData {
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    fail(where, "expected an object");
  }
  const obj = raw as Record<string, unknown>;
  for (const field of ["id", "n", "edges", "positions"]) {
    if (!(field in obj)) fail(where, `missing field '${field}'`);
  }
  const id = obj.id;
  if (typeof id !== "string" || id.length === 0) {
    fail(where, "field 'id' must be a nonempty string");
  }
  const n = obj.n;
  if (typeof n !== "number" || !Number.isInteger(n) || n < 0) {
    fail(where, "field 'n' must be a nonnegative integer");
  }
  if (!Array.isArray(obj.edges)) fail(where, "field 'edges' must be an array");
  const edges: Edge[] = obj.edges.map((e, k) => {
    if (!Array.isArray(e) || e.length !== 2) {
      fail(where, `field 'edges' entry ${k} must be a pair`);
    }
    const [u, v] = e as [unknown, unknown];
    if (typeof u !== "number" || typeof v !== "number"
        || !Number.isInteger(u) || !Number.isInteger(v)
        || u < 0 || v < 0 || u >= n || v >= n || u === v) {
      fail(where, `field 'edges' entry ${k} is not a valid vertex pair`);
    }
    return [u, v];
  });
  if (!Array.isArray(obj.positions) || obj.positions.length !== n) {
    fail(where, `field 'positions' must list exactly ${n} points`);
  }
  const positions: Point[] = obj.positions.map((p, k) => {
    if (!Array.isArray(p) || p.length !== 2
        || typeof p[0] !== "number" || typeof p[1] !== "number") {
      fail(where, `field 'positions' entry ${k} must be an [x, y] pair`);
    }
    return [p[0], p[1]];
  });
  const level: LevelData = { id, n, edges, positions };
  if (obj.unsolvable === true) level.unsolvable = true;
  return level;
}

/** Difficulty rank: vertex count, then edge count, then id for stability. */
export function compareLevels(a: LevelData, b: LevelData): number {
  return a.n - b.n || a.edges.length - b.edges.length
      || (a.id < b.id ? -1 : a.id > b.id ? 1 : 0);
}

/** Parse a corpus document; duplicate ids are rejected. */
export function parseCorpus(doc: unknown, source = "corpus"): LevelData[] {
  if (typeof doc !== "object" || doc === null
      || !Array.isArray((doc as Record<string, unknown>).levels)) {
    fail(source, "expected an object with a 'levels' array");
  }
  const seen = new Set<string>();
  const levels = (doc as { levels: unknown[] }).levels.map((raw, i) => {
    const level = parseLevel(raw, `${source}: levels[${i}]`);
    if (seen.has(level.id)) {
      fail(`${source}: levels[${i}]`, `duplicate level id '${level.id}'`);
    }
    seen.add(level.id);
    return level;
  });
  return levels.sort(compareLevels);
}

export function parseFixtures(doc: unknown, source = "fixtures"): FixtureData[] {
  if (typeof doc !== "object" || doc === null
      || !Array.isArray((doc as Record<string, unknown>).fixtures)) {
    fail(source, "expected an object with a 'fixtures' array");
  }
  return (doc as { fixtures: FixtureData[] }).fixtures;
}

/** Fetch and parse a corpus over HTTP (the static-bundle path). */
export async function loadCorpus(url: string): Promise<LevelData[]> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new CorpusError(`${url}: HTTP ${response.status}`);
  }
  return parseCorpus(await response.json(), url);
}
