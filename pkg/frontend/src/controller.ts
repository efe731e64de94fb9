// Game controller: every displayed verdict originates from a service
// response. No optimistic rendering: a rejected move flashes the pair the
// service reported and leaves the board exactly as the last confirmed
// state rendered it.

import { GameClient, GameStateDto, MoveDto, ServiceError } from "./api.js";
import { BoardView } from "./board.js";
import { exportGameFile } from "./gamefile.js";

const sleep = (ms: number) => new Promise((resolve) => setTimeout(resolve, ms));

export class GameController {
  session: string | null = null;
  state: GameStateDto | null = null;
  moveLog: MoveDto[] = [];

  constructor(
    private readonly client: GameClient,
    private readonly board: BoardView,
  ) {
    board.onCellClick = (index, position) => {
      void this.clickCell(index, position);
    };
  }

  async newGame(k: number, d: number): Promise<boolean> {
    if (!Number.isInteger(d) || d < 2) {
      this.board.showError(`invalid width d=${d}: the target b(d) starts at d=2`);
      return false;
    }
    if (!Number.isInteger(k) || k < 1 || k > d) {
      this.board.showError(`invalid bound k=${k}: need 1 <= k <= d`);
      return false;
    }
    try {
      const created = await this.client.createGame(k, d);
      this.session = created.session;
      this.moveLog = [];
      this.confirm(created.state);
      return true;
    } catch (err) {
      this.session = null;
      this.state = null;
      this.board.clearBoard();
      this.board.showError(
        err instanceof ServiceError ? err.message : `failed to start: ${String(err)}`,
      );
      return false;
    }
  }

  // Split the clicked joker. The move POST is the legality check; a 409
  // answer means the board stays put and the violating pair flashes.
  async clickCell(index: number, position: number): Promise<void> {
    if (this.session === null || this.state === null) return;
    const symbol = this.state.strings[index]?.[position - 1];
    if (symbol !== "*") return; // inert on non-joker cells
    this.board.clearViolation();
    try {
      const outcome = await this.client.applyMove(this.session, { index, position });
      if (outcome.ok) {
        this.moveLog.push({ index, position });
        this.confirm(outcome.state);
      } else if (outcome.rejection.violating_pair) {
        this.board.flashViolation(outcome.rejection.violating_pair);
      } else {
        this.board.showError(outcome.rejection.error);
      }
    } catch (err) {
      this.board.showError(err instanceof Error ? err.message : String(err));
    }
  }

  async hint(budgetMs = 2000): Promise<MoveDto | null> {
    if (this.session === null || this.state === null || this.state.terminal) {
      return null;
    }
    try {
      const move = await this.client.hint(this.session, budgetMs);
      if (move === null) {
        this.board.showNotice("no hint within budget");
        return null;
      }
      this.board.pulseCell(move.index, move.position);
      return move;
    } catch (err) {
      this.board.showError(err instanceof Error ? err.message : String(err));
      return null;
    }
  }

  async undoMove(): Promise<void> {
    if (this.session === null || this.moveLog.length === 0) return;
    try {
      const state = await this.client.undo(this.session);
      this.moveLog.pop();
      this.confirm(state);
    } catch (err) {
      this.board.showError(err instanceof Error ? err.message : String(err));
    }
  }

  async replayLine(moves: MoveDto[], delayMs = 0): Promise<void> {
    for (const move of moves) {
      await this.clickCell(move.index, move.position);
      if (delayMs > 0) await sleep(delayMs);
    }
  }

  exportLog(): string {
    if (this.state === null) throw new Error("no game in progress");
    return exportGameFile(this.state, this.moveLog);
  }

  private confirm(state: GameStateDto): void {
    this.state = state;
    this.board.render(state, this.moveLog);
  }
}
