// Typed client for the splitting-game JSON service. Strings travel as text
// over "01*"; moves as {index, position} (0-based string, 1-based joker).

export interface MoveDto {
  index: number;
  position: number;
}

export interface ReferenceDto {
  b_d: number;
  n_kd_if_known: number | null;
}

export interface GameStateDto {
  k: number;
  d: number;
  strings: string[];
  score: number;
  terminal: boolean;
  reference: ReferenceDto;
}

export interface ViolatingPairDto {
  indices: [number, number];
  strings: [string, string];
  distance: number;
}

export interface IllegalMoveDto {
  error: string;
  violating_pair: ViolatingPairDto | null;
}

export type MoveOutcome =
  | { ok: true; state: GameStateDto }
  | { ok: false; rejection: IllegalMoveDto };

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
  }
}

export class GameClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (err) {
      throw new ServiceError(`service unreachable: ${String(err)}`);
    }
    return response;
  }

  private async expectJson<T>(response: Response): Promise<T> {
    if (!response.ok) {
      throw new ServiceError(`unexpected status ${response.status}`, response.status);
    }
    return (await response.json()) as T;
  }

  async createGame(k: number, d: number): Promise<{ session: string; state: GameStateDto }> {
    const response = await this.request("/game", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ k, d }),
    });
    return this.expectJson(response);
  }

  async getState(session: string): Promise<GameStateDto> {
    return this.expectJson(await this.request(`/game/${session}`));
  }

  async getMoves(session: string): Promise<MoveDto[]> {
    return this.expectJson(await this.request(`/game/${session}/moves`));
  }

  // The POST is itself the legality query: 200 confirms, 409 carries the
  // violating pair. The board must only re-render from the returned state.
  async applyMove(session: string, move: MoveDto): Promise<MoveOutcome> {
    const response = await this.request(`/game/${session}/move`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(move),
    });
    if (response.status === 409) {
      return { ok: false, rejection: (await response.json()) as IllegalMoveDto };
    }
    return { ok: true, state: await this.expectJson<GameStateDto>(response) };
  }

  async undo(session: string): Promise<GameStateDto> {
    const response = await this.request(`/game/${session}/undo`, { method: "POST" });
    return this.expectJson(response);
  }

  async hint(session: string, budgetMs: number): Promise<MoveDto | null> {
    const response = await this.request(`/game/${session}/hint`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ budget_ms: budgetMs }),
    });
    const body = await this.expectJson<{ move: MoveDto | null }>(response);
    return body.move;
  }
}
