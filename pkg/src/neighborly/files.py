"""Text formats: code files, covering files, and serialized games.

Code file: UTF-8 text, '#' starts a comment line, an optional first
non-comment line "k=<int> d=<int>", then one string over {0,1,*} per
non-empty line, all of equal length.

Covering file: first line "n=<int>", then one clique per line as
"X: i1 i2 ... | Y: j1 j2 ..." with 1-indexed vertices.

Game file: a code file holding the current position plus a trailer line
"moves: (index, position) ..." listing the history (0-based string index,
1-based joker position).  Loading replays the moves from the all-joker
start and cross-checks the stored position.
"""

from __future__ import annotations

import re

from .covering import BipartiteCovering
from .game import GameState, Move, replay
from .strings import CodeList, TernaryString

_HEADER_RE = re.compile(r"^k=(\d+)\s+d=(\d+)$")
_MOVES_RE = re.compile(r"^moves:\s*(.*)$")
_MOVE_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


class FileFormatError(ValueError):
    pass


def parse_code(text: str) -> tuple[CodeList, int | None, int | None]:
    """Parse a code file; returns (code, k, d) with k/d None when absent."""
    k = d = None
    strings: list[TernaryString] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not seen_content:
            seen_content = True
            m = _HEADER_RE.match(line)
            if m:
                k, d = int(m.group(1)), int(m.group(2))
                continue
        try:
            strings.append(TernaryString.parse(line))
        except ValueError as exc:
            raise FileFormatError(f"line {lineno}: {exc}") from exc
    if not strings:
        raise FileFormatError("no code strings found")
    widths = {s.width for s in strings}
    if len(widths) > 1:
        raise FileFormatError(f"strings of unequal widths: {sorted(widths)}")
    if d is not None and strings[0].width != d:
        raise FileFormatError(f"header claims d={d} but strings have width {strings[0].width}")
    return CodeList(strings), k, d


def format_code(code: CodeList, k: int | None = None, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    if k is not None:
        lines.append(f"k={k} d={code.width}")
    lines.extend(code.texts())
    return "\n".join(lines) + "\n"


def load_code(path) -> tuple[CodeList, int | None, int | None]:
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def save_code(path, code: CodeList, k: int | None = None, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code(code, k=k, comment=comment))


def parse_covering(text: str) -> BipartiteCovering:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise FileFormatError('covering file must start with "n=<int>"')
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise FileFormatError(f"bad vertex count line: {lines[0]!r}") from exc
    cliques = []
    for line in lines[1:]:
        m = re.match(r"^X:\s*([\d\s]*?)\s*\|\s*Y:\s*([\d\s]*?)\s*$", line)
        if not m:
            raise FileFormatError(f"bad clique line: {line!r}")
        x = frozenset(int(t) for t in m.group(1).split())
        y = frozenset(int(t) for t in m.group(2).split())
        cliques.append((x, y))
    return BipartiteCovering(n_vertices=n, cliques=tuple(cliques))


def format_covering(cov: BipartiteCovering) -> str:
    lines = [f"n={cov.n_vertices}"]
    for x, y in cov.cliques:
        lines.append(
            "X: " + " ".join(str(i) for i in sorted(x))
            + " | Y: " + " ".join(str(i) for i in sorted(y))
        )
    return "\n".join(lines) + "\n"


def load_covering(path) -> BipartiteCovering:
    with open(path, encoding="utf-8") as fh:
        return parse_covering(fh.read())


def save_covering(path, cov: BipartiteCovering) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_covering(cov))


def format_game(state: GameState) -> str:
    moves = " ".join(f"({m.index}, {m.position})" for m in state.history)
    return format_code(state.code, k=state.k) + f"moves: {moves}\n"


def parse_game(text: str) -> GameState:
    """Replay the stored history and check it reproduces the stored code."""
    moves_line = None
    code_lines = []
    for raw in text.splitlines():
        m = _MOVES_RE.match(raw.strip())
        if m:
            moves_line = m.group(1)
        else:
            code_lines.append(raw)
    if moves_line is None:
        raise FileFormatError('game file needs a "moves:" trailer')
    code, k, d = parse_code("\n".join(code_lines))
    if k is None:
        raise FileFormatError('game file needs a "k=... d=..." header')
    moves = [Move(int(a), int(b)) for a, b in _MOVE_PAIR_RE.findall(moves_line)]
    state = replay(k, code.width, moves)
    # compare as multisets: files may have been normalized by sorting
    if sorted(state.code.texts()) != sorted(code.texts()):
        raise FileFormatError("stored moves do not reproduce the stored code")
    return state


def load_game(path) -> GameState:
    with open(path, encoding="utf-8") as fh:
        return parse_game(fh.read())


def save_game(path, state: GameState) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_game(state))
