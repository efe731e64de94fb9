"""JSON-over-HTTP splitting-game service.

Sessions live in memory and die with the process.  Every state response is
a pure function of the session's move history.  Strings travel as text
over "01*"; moves as {index, position} with a 0-based string index and a
1-based joker position.  The service binds loopback by default and has no
auth: it is a single-user research tool.

Endpoints:
    POST /game                  {k, d} -> {session, state}
    GET  /game/{id}             -> state
    GET  /game/{id}/moves       -> [{index, position}]
    POST /game/{id}/move        {index, position} -> state | 409 error
    POST /game/{id}/undo        -> state | 409 error
    POST /game/{id}/hint        {budget_ms} -> {move | null}
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, model_validator

from . import game as engine
from .sequences import b, known_max_code_size


class CreateGameRequest(BaseModel):
    k: int = Field(ge=1)
    d: int = Field(ge=2, le=64)

    @model_validator(mode="after")
    def _k_at_most_d(self):
        if self.k > self.d:
            raise ValueError("k must not exceed d")
        return self


class MoveModel(BaseModel):
    index: int = Field(ge=0, description="0-based string index")
    position: int = Field(ge=1, description="1-based joker position")


class HintRequest(BaseModel):
    budget_ms: int = Field(default=1000, ge=1, le=600_000)


class ReferenceModel(BaseModel):
    b_d: int
    n_kd_if_known: int | None


class GameStateModel(BaseModel):
    k: int
    d: int
    strings: list[str]
    score: int
    terminal: bool
    reference: ReferenceModel


class CreateGameResponse(BaseModel):
    session: str
    state: GameStateModel


class HintResponse(BaseModel):
    move: MoveModel | None


@dataclass
class _Session:
    state: engine.GameState
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self):
        self._sessions: dict[str, _Session] = {}
        self._lock = threading.Lock()

    def create(self, state: engine.GameState) -> str:
        sid = uuid.uuid4().hex
        with self._lock:
            self._sessions[sid] = _Session(state)
        return sid

    def get(self, sid: str) -> _Session | None:
        with self._lock:
            return self._sessions.get(sid)


def _state_model(state: engine.GameState) -> GameStateModel:
    return GameStateModel(
        k=state.k,
        d=state.d,
        strings=state.code.texts(),
        score=state.score,
        terminal=state.is_terminal(),
        reference=ReferenceModel(
            b_d=b(state.d),
            n_kd_if_known=known_max_code_size(state.k, state.d),
        ),
    )


def _unknown_session() -> JSONResponse:
    return JSONResponse(status_code=404, content={"error": "unknown session"})


def create_app() -> FastAPI:
    app = FastAPI(title="neighborly splitting game", version="0.1.0")
    # the browser client is served from a different local port
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = SessionStore()
    app.state.sessions = store

    @app.post("/game", response_model=CreateGameResponse)
    def create_game(req: CreateGameRequest):
        state = engine.GameState.initial(req.k, req.d)
        sid = store.create(state)
        return CreateGameResponse(session=sid, state=_state_model(state))

    @app.get("/game/{sid}", response_model=GameStateModel, responses={404: {}})
    def get_state(sid: str):
        session = store.get(sid)
        if session is None:
            return _unknown_session()
        with session.lock:
            return _state_model(session.state)

    @app.get("/game/{sid}/moves", response_model=list[MoveModel], responses={404: {}})
    def get_moves(sid: str):
        session = store.get(sid)
        if session is None:
            return _unknown_session()
        with session.lock:
            moves = engine.legal_moves(session.state)
        return [MoveModel(index=m.index, position=m.position) for m in moves]

    @app.post("/game/{sid}/move", response_model=GameStateModel, responses={404: {}, 409: {}})
    def post_move(sid: str, move: MoveModel):
        session = store.get(sid)
        if session is None:
            return _unknown_session()
        with session.lock:
            try:
                session.state = engine.apply(
                    session.state, engine.Move(move.index, move.position)
                )
            except engine.IllegalMoveError as exc:
                payload = {"error": str(exc), "violating_pair": None}
                if exc.violation is not None:
                    v = exc.violation
                    payload["violating_pair"] = {
                        "indices": [move.index, v.other_index],
                        "strings": [v.child.text, v.other.text],
                        "distance": v.distance,
                    }
                return JSONResponse(status_code=409, content=payload)
            return _state_model(session.state)

    @app.post("/game/{sid}/undo", response_model=GameStateModel, responses={404: {}, 409: {}})
    def post_undo(sid: str):
        session = store.get(sid)
        if session is None:
            return _unknown_session()
        with session.lock:
            try:
                session.state = engine.undo(session.state)
            except ValueError as exc:
                return JSONResponse(status_code=409, content={"error": str(exc)})
            return _state_model(session.state)

    @app.post("/game/{sid}/hint", response_model=HintResponse, responses={404: {}})
    def post_hint(sid: str, req: HintRequest | None = None):
        session = store.get(sid)
        if session is None:
            return _unknown_session()
        budget = (req.budget_ms if req else 1000) / 1000.0
        with session.lock:
            move = engine.hint(session.state, time_budget=budget)
        if move is None:
            return HintResponse(move=None)
        return HintResponse(move=MoveModel(index=move.index, position=move.position))

    return app


app = create_app()
