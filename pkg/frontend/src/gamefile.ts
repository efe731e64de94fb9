// Move-log export in the game-file format the CLI reads back:
// a code file (k=.. d=.. header plus one string per line) and a
// "moves: (index, position) ..." trailer.

import { GameStateDto, MoveDto } from "./api.js";

export function exportGameFile(state: GameStateDto, moves: MoveDto[]): string {
  const lines = [`k=${state.k} d=${state.d}`, ...state.strings];
  const trailer = moves.map((m) => `(${m.index}, ${m.position})`).join(" ");
  return lines.join("\n") + "\n" + `moves: ${trailer}\n`;
}

export function parseMoveTrailer(text: string): MoveDto[] {
  const line = text
    .split("\n")
    .map((l) => l.trim())
    .find((l) => l.startsWith("moves:"));
  if (line === undefined) {
    throw new Error('no "moves:" trailer found');
  }
  const moves: MoveDto[] = [];
  for (const match of line.matchAll(/\(\s*(\d+)\s*,\s*(\d+)\s*\)/g)) {
    moves.push({ index: Number(match[1]), position: Number(match[2]) });
  }
  return moves;
}
