import { describe, expect, it } from "vitest";
import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";

import { CorpusError, compareLevels, parseCorpus, parseFixtures } from "../src/model.js";

const dataPath = (name: string) =>
  fileURLToPath(new URL(`../data/${name}`, import.meta.url));

const corpusDoc = () =>
  JSON.parse(readFileSync(dataPath("levels.json"), "utf8"));

describe("parseCorpus", () => {
  it("loads the shipped corpus sorted by difficulty", () => {
    const levels = parseCorpus(corpusDoc());
    expect(levels.length).toBeGreaterThanOrEqual(140);
    for (let i = 1; i < levels.length; i++) {
      expect(compareLevels(levels[i - 1], levels[i])).toBeLessThan(0);
    }
    const fives = levels.filter((lv) => lv.n === 5);
    expect(fives).toHaveLength(20);
  });

  it("accepts an empty corpus", () => {
    expect(parseCorpus({ levels: [] })).toEqual([]);
  });

  it("rejects a document without a levels array", () => {
    expect(() => parseCorpus({ stages: [] }))
      .toThrowError(/'levels' array/);
  });

  it("rejects duplicate ids", () => {
    const doc = corpusDoc();
    doc.levels.push(doc.levels[0]);
    expect(() => parseCorpus(doc)).toThrowError(/duplicate level id/);
  });

  it("names the missing field", () => {
    const doc = { levels: [{ id: "x", n: 2, edges: [[0, 1]] }] };
    expect(() => parseCorpus(doc)).toThrowError(/missing field 'positions'/);
  });

  it("names the broken field and entry", () => {
    const doc = {
      levels: [{ id: "x", n: 2, edges: [[0, 2]],
                 positions: [[0, 0], [1, 1]] }],
    };
    try {
      parseCorpus(doc);
      expect.unreachable();
    } catch (error) {
      expect(error).toBeInstanceOf(CorpusError);
      expect(String(error)).toMatch(/'edges' entry 0/);
    }
  });

  it("rejects a position count that disagrees with n", () => {
    const doc = {
      levels: [{ id: "x", n: 3, edges: [], positions: [[0, 0]] }],
    };
    expect(() => parseCorpus(doc)).toThrowError(/exactly 3 points/);
  });

  it("keeps the unsolvable exhibition marker", () => {
    const doc = {
      levels: [{ id: "x", n: 1, edges: [], positions: [[0, 0]],
                 unsolvable: true }],
    };
    expect(parseCorpus(doc)[0].unsolvable).toBe(true);
  });
});

describe("parseFixtures", () => {
  it("loads the shipped fixture set", () => {
    const doc = JSON.parse(readFileSync(dataPath("fixtures.json"), "utf8"));
    const fixtures = parseFixtures(doc);
    expect(fixtures.length).toBeGreaterThanOrEqual(200);
  });

  it("rejects junk", () => {
    expect(() => parseFixtures([])).toThrowError(/'fixtures' array/);
  });
});
