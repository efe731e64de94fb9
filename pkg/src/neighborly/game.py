"""The one-player splitting game on ternary codes.

Play starts from the single all-joker string.  A move picks a string with a
joker, replaces that joker by 0 and by 1, and keeps the position only if
the enlarged set is still a k-neighborly code.  Every legal move grows the
code by one, so the best final size over all play lines is the game's
score; it never exceeds n(k, d).

States are immutable; apply/undo return new states.  The exhaustive solver
prunes transpositions on the code viewed as a multiset (move legality does
not depend on list order).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations, product

from .strings import CodeList, TernaryString, dist


@dataclass(frozen=True)
class Move:
    """Split the string at `index` (0-based) at joker `position` (1-based)."""

    index: int
    position: int


@dataclass(frozen=True)
class Violation:
    """Why a move is illegal: the new child string meets `other` at a
    distance outside [1, k]."""

    child: TernaryString
    other_index: int
    other: TernaryString
    distance: int

    def describe(self) -> str:
        return (
            f"{self.child} vs {self.other} (index {self.other_index}) "
            f"at distance {self.distance}"
        )


class IllegalMoveError(ValueError):
    def __init__(self, move: Move, violation: Violation | None, reason: str = ""):
        self.move = move
        self.violation = violation
        msg = reason or (violation.describe() if violation else "illegal move")
        super().__init__(f"illegal move ({move.index}, {move.position}): {msg}")


def split(v: TernaryString, position: int) -> tuple[TernaryString, TernaryString]:
    """The two strings with joker `position` (1-based) set to 0 and to 1."""
    if v[position - 1] != "*":
        raise ValueError(f"position {position} of {v} holds {v[position - 1]!r}, not a joker")
    return v.with_symbol(position, "0"), v.with_symbol(position, "1")


@dataclass(frozen=True)
class GameState:
    k: int
    d: int
    code: CodeList
    history: tuple[Move, ...] = ()

    @classmethod
    def initial(cls, k: int, d: int) -> "GameState":
        if not 1 <= k <= d:
            raise ValueError(f"need 1 <= k <= d, got k={k}, d={d}")
        return cls(k=k, d=d, code=CodeList((TernaryString.jokers(d),)))

    @property
    def score(self) -> int:
        return len(self.code)

    def is_terminal(self) -> bool:
        return not legal_moves(self)


def _check_move(state: GameState, move: Move) -> Violation | None:
    """None if legal, else the first violation; raises on malformed moves."""
    if not 0 <= move.index < len(state.code):
        raise IllegalMoveError(move, None, "no string at that index")
    v = state.code[move.index]
    if not 1 <= move.position <= state.d or v[move.position - 1] != "*":
        raise IllegalMoveError(move, None, "no joker at that position")
    lo, hi = split(v, move.position)
    for j, other in enumerate(state.code):
        if j == move.index:
            continue
        for child in (lo, hi):
            d = dist(child, other)
            if not 1 <= d <= state.k:
                return Violation(child, j, other, d)
    return None  # dist(lo, hi) = 1 needs no check


def is_legal(state: GameState, move: Move) -> bool:
    try:
        return _check_move(state, move) is None
    except IllegalMoveError:
        return False


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves, ordered by (index, position)."""
    moves = []
    for i, s in enumerate(state.code):
        for pos in range(1, state.d + 1):
            if s[pos - 1] == "*":
                m = Move(i, pos)
                if _check_move(state, m) is None:
                    moves.append(m)
    return moves


def apply(state: GameState, move: Move) -> GameState:
    """Replace the split string by its two children (0-child first)."""
    violation = _check_move(state, move)
    if violation is not None:
        raise IllegalMoveError(move, violation)
    v = state.code[move.index]
    lo, hi = split(v, move.position)
    strings = state.code.strings
    new_strings = strings[: move.index] + strings[move.index + 1 :] + (lo, hi)
    return GameState(
        k=state.k,
        d=state.d,
        code=CodeList(new_strings, state.d),
        history=state.history + (move,),
    )


def undo(state: GameState) -> GameState:
    """Exact inverse of the last apply."""
    if not state.history:
        raise ValueError("nothing to undo: empty history")
    move = state.history[-1]
    strings = state.code.strings
    lo = strings[-2]
    merged = lo.with_symbol(move.position, "*")
    restored = strings[:-2]
    restored = restored[: move.index] + (merged,) + restored[move.index :]
    return GameState(
        k=state.k,
        d=state.d,
        code=CodeList(restored, state.d),
        history=state.history[:-1],
    )


def replay(k: int, d: int, moves: list[Move]) -> GameState:
    """Apply a stored move list from the initial position."""
    state = GameState.initial(k, d)
    for m in moves:
        state = apply(state, m)
    return state


@dataclass
class SolveResult:
    score: int
    line: tuple[Move, ...]
    proven: bool
    states_explored: int = 0


_SOLVE_CHECK_EVERY = 1024


class _SolveTimeout(Exception):
    pass


def _canonical(code: CodeList) -> tuple[str, ...]:
    return tuple(sorted(s.text for s in code))


def _symmetry_canonical(code: CodeList) -> tuple[str, ...]:
    """Least sorted text tuple over coordinate permutations and 0/1 swaps."""
    texts = [s.text for s in code]
    d = code.width
    flip = {"0": "1", "1": "0", "*": "*"}
    best = None
    for perm in permutations(range(d)):
        for flips in product((False, True), repeat=d):
            variant = tuple(
                sorted(
                    "".join(flip[t[p]] if flips[j] else t[p] for j, p in enumerate(perm))
                    for t in texts
                )
            )
            if best is None or variant < best:
                best = variant
    return best


def solve(
    k: int,
    d: int,
    time_budget: float = 300.0,
    symmetry: bool = False,
    start: GameState | None = None,
) -> SolveResult:
    """Exhaustive score of the splitting game, with a best play line.

    Depth-first over all play lines; a state whose multiset was already
    fully explored is skipped (its subtree maximum is already reflected in
    the incumbent).  `symmetry` additionally collapses states equal up to
    coordinate permutation and 0/1 swaps; the score must not depend on it.
    Proven mode is guarded to d <= 5.
    """
    if start is None:
        if d > 5:
            raise ValueError("exhaustive solve is guarded to d <= 5")
        start = GameState.initial(k, d)
    deadline = time.monotonic() + time_budget
    canonical = _symmetry_canonical if symmetry else _canonical
    visited: set[tuple[str, ...]] = set()
    best_score = start.score
    best_line = start.history
    states = 0
    proven = True

    def dfs(state: GameState):
        nonlocal best_score, best_line, states
        states += 1
        if states % _SOLVE_CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _SolveTimeout
        key = canonical(state.code)
        if key in visited:
            return
        visited.add(key)
        if state.score > best_score:
            best_score = state.score
            best_line = state.history
        for move in legal_moves(state):
            dfs(apply(state, move))

    try:
        dfs(start)
    except _SolveTimeout:
        proven = False
    return SolveResult(best_score, best_line, proven, states)


def hint(state: GameState, time_budget: float = 1.0) -> Move | None:
    """A legal move maximizing the reachable score within the budget.

    Ties break to the lowest (index, position).  None at terminal states.
    """
    moves = legal_moves(state)
    if not moves:
        return None
    share = time_budget / len(moves)
    best_move, best_score = None, -1
    for move in moves:
        child = apply(state, move)
        result = solve(state.k, state.d, time_budget=share, start=child)
        if result.score > best_score:
            best_move, best_score = move, result.score
    return best_move
