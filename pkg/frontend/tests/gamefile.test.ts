import { describe, expect, it } from "vitest";

import { GameStateDto } from "../src/api.js";
import { exportGameFile, parseMoveTrailer } from "../src/gamefile.js";

const state: GameStateDto = {
  k: 2,
  d: 3,
  strings: ["1**", "00*", "01*"],
  score: 3,
  terminal: false,
  reference: { b_d: 6, n_kd_if_known: 6 },
};

describe("exportGameFile", () => {
  it("writes the code-file header, strings, and moves trailer", () => {
    const text = exportGameFile(state, [
      { index: 0, position: 1 },
      { index: 0, position: 2 },
    ]);
    expect(text).toBe("k=2 d=3\n1**\n00*\n01*\nmoves: (0, 1) (0, 2)\n");
  });

  it("writes an empty trailer for a fresh game", () => {
    const fresh = { ...state, strings: ["***"], score: 1 };
    expect(exportGameFile(fresh, [])).toBe("k=2 d=3\n***\nmoves: \n");
  });
});

describe("parseMoveTrailer", () => {
  it("round-trips the exported format", () => {
    const moves = [
      { index: 0, position: 1 },
      { index: 1, position: 3 },
    ];
    expect(parseMoveTrailer(exportGameFile(state, moves))).toEqual(moves);
  });

  it("accepts a bare trailer line", () => {
    expect(parseMoveTrailer("moves: (0,1) (2, 3)")).toEqual([
      { index: 0, position: 1 },
      { index: 2, position: 3 },
    ]);
  });

  it("rejects text without a trailer", () => {
    expect(() => parseMoveTrailer("k=2 d=3\n***\n")).toThrow(/moves/);
  });
});
