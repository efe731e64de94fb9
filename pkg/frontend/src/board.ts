// DOM board: rows of colored cells mirroring the last confirmed service
// state. Nothing here mutates game data; render() is the only way the
// grid changes, and it always receives a state the service returned.

import { GameStateDto, MoveDto, ViolatingPairDto } from "./api.js";
import { PALETTE } from "./palette.js";

export type CellClickHandler = (index: number, position: number) => void;

export class BoardView {
  private grid: HTMLElement;
  private status: HTMLElement;
  private banner: HTMLElement;
  private log: HTMLElement;
  onCellClick: CellClickHandler | null = null;

  constructor(private readonly root: HTMLElement) {
    this.status = this.section("board-status");
    this.banner = this.section("board-banner");
    this.grid = this.section("board-grid");
    this.log = this.section("board-log");
  }

  private section(className: string): HTMLElement {
    const el = this.root.ownerDocument.createElement("div");
    el.className = className;
    this.root.appendChild(el);
    return el;
  }

  render(state: GameStateDto, moveLog: MoveDto[]): void {
    const doc = this.root.ownerDocument;
    const known = state.reference.n_kd_if_known;
    this.status.textContent =
      `score ${state.score} | target b(${state.d}) = ${state.reference.b_d}` +
      (known !== null ? ` | n(${state.k},${state.d}) = ${known}` : "");

    this.banner.textContent = "";
    this.banner.className = "board-banner";
    if (state.terminal) {
      this.banner.classList.add("terminal");
      this.banner.textContent =
        known !== null && state.score === known
          ? `maximum possible: n(${state.k},${state.d})=${known}`
          : `no legal moves left at score ${state.score}`;
    }

    this.grid.replaceChildren();
    state.strings.forEach((text, index) => {
      const row = doc.createElement("div");
      row.className = "board-row";
      row.dataset.index = String(index);
      for (let pos = 1; pos <= text.length; pos++) {
        const symbol = text[pos - 1];
        const cell = doc.createElement("span");
        cell.className = symbol === "*" ? "board-cell joker" : "board-cell";
        cell.dataset.position = String(pos);
        cell.dataset.symbol = symbol;
        cell.style.backgroundColor = PALETTE[symbol];
        if (symbol === "*") {
          // cursor affordance only on jokers; other cells are inert
          cell.addEventListener("click", () => this.onCellClick?.(index, pos));
        }
        row.appendChild(cell);
      }
      this.grid.appendChild(row);
    });

    this.log.textContent =
      "moves: " + moveLog.map((m) => `(${m.index}, ${m.position})`).join(" ");
  }

  rows(): HTMLElement[] {
    return Array.from(this.grid.querySelectorAll<HTMLElement>(".board-row"));
  }

  flashViolation(pair: ViolatingPairDto): void {
    const rows = this.rows();
    for (const index of pair.indices) {
      rows[index]?.classList.add("violating");
    }
    this.banner.className = "board-banner rejection";
    this.banner.textContent =
      `illegal: ${pair.strings[0]} vs ${pair.strings[1]} at distance ${pair.distance}`;
  }

  clearViolation(): void {
    for (const row of this.rows()) {
      row.classList.remove("violating");
    }
  }

  pulseCell(index: number, position: number): void {
    const row = this.rows()[index];
    const cell = row?.querySelector<HTMLElement>(`[data-position="${position}"]`);
    cell?.classList.add("pulse");
  }

  showError(message: string): void {
    this.banner.className = "board-banner error";
    this.banner.textContent = message;
  }

  showNotice(message: string): void {
    this.banner.className = "board-banner notice";
    this.banner.textContent = message;
  }

  clearBoard(): void {
    this.grid.replaceChildren();
    this.status.textContent = "";
    this.log.textContent = "";
  }
}
