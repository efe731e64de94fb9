"""Heat-map rendering of codes: red = 0, grey = *, black = 1.

A code of n strings of width d becomes an n x d grid, row i showing string
i in list order (sorting would destroy the construction structure the maps
are meant to expose).  SVG output is one rect per cell; PPM output is
binary P6 with cell_size x cell_size pixels per cell.  Both are
byte-deterministic for a given code and flags.
"""

from __future__ import annotations

from .strings import CodeList

PALETTE: dict[str, tuple[int, int, int]] = {
    "0": (255, 0, 0),
    "*": (128, 128, 128),
    "1": (0, 0, 0),
}

FORMATS = ("svg", "ppm")


def render_heatmap(code: CodeList, fmt: str = "svg", cell_size: int = 16) -> bytes:
    """Render the code as image bytes in the requested format."""
    if len(code) == 0:
        raise ValueError("cannot render an empty code")
    if cell_size < 1:
        raise ValueError("cell size must be a positive integer")
    if fmt == "svg":
        return _render_svg(code, cell_size)
    if fmt == "ppm":
        return _render_ppm(code, cell_size)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _hex(rgb: tuple[int, int, int]) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _render_svg(code: CodeList, cell: int) -> bytes:
    n, d = len(code), code.width
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{d * cell}" height="{n * cell}" '
        f'viewBox="0 0 {d * cell} {n * cell}">',
    ]
    for i, s in enumerate(code):
        for j, ch in enumerate(s):
            lines.append(
                f'<rect x="{j * cell}" y="{i * cell}" width="{cell}" height="{cell}" '
                f'fill="{_hex(PALETTE[ch])}"/>'
            )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _render_ppm(code: CodeList, cell: int) -> bytes:
    n, d = len(code), code.width
    w, h = d * cell, n * cell
    header = f"P6\n{w} {h}\n255\n".encode("ascii")
    rows = []
    for s in code:
        row = b"".join(bytes(PALETTE[ch]) * cell for ch in s)
        rows.append(row * cell)
    return header + b"".join(rows)
