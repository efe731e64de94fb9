// Bootstrap: form wiring for the splitting-game explorer.

import { GameClient } from "./api.js";
import { BoardView } from "./board.js";
import { GameController } from "./controller.js";
import { parseMoveTrailer } from "./gamefile.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

export function bootstrap(): GameController {
  const serviceUrl =
    (byId<HTMLInputElement>("service-url").value || "http://127.0.0.1:8321").replace(/\/$/, "");
  const client = new GameClient(serviceUrl);
  const board = new BoardView(byId<HTMLDivElement>("board"));
  const controller = new GameController(client, board);

  byId<HTMLButtonElement>("new-game").addEventListener("click", () => {
    const k = Number(byId<HTMLInputElement>("input-k").value);
    const d = Number(byId<HTMLInputElement>("input-d").value);
    void controller.newGame(k, d).then((ok) => {
      byId<HTMLButtonElement>("hint").disabled = !ok;
      byId<HTMLButtonElement>("undo").disabled = !ok;
    });
  });

  byId<HTMLButtonElement>("hint").addEventListener("click", () => {
    void controller.hint(2000);
  });

  byId<HTMLButtonElement>("undo").addEventListener("click", () => {
    void controller.undoMove();
  });

  byId<HTMLButtonElement>("replay").addEventListener("click", () => {
    const text = byId<HTMLTextAreaElement>("replay-input").value;
    try {
      void controller.replayLine(parseMoveTrailer(text), 150);
    } catch (err) {
      window.alert(String(err));
    }
  });

  byId<HTMLButtonElement>("export").addEventListener("click", () => {
    byId<HTMLTextAreaElement>("replay-input").value = controller.exportLog();
  });

  return controller;
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  bootstrap();
}
