"""Ternary strings over {0, 1, *}, the joker-aware distance, and code lists.

A string of length d over the alphabet {0, 1, *} encodes a normalized box
in R^d: 0 -> [0, 1/2], 1 -> [1/2, 1], * (the joker) -> [0, 1].  The distance
between two strings counts the positions where both hold opposite binary
digits; a family is a k-neighborly code when every pairwise distance lies
in [1, k].

Strings are stored as two bit planes (a "defined" mask marking non-joker
positions and a value plane marking 1s) so the distance is a popcount over
a masked XOR.  Bit i of each plane is position i counted from the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

ALPHABET = "01*"

_WORD = 64  # bits per plane word in the numpy layout


class TernaryString:
    """Immutable fixed-length word over {0, 1, *}."""

    __slots__ = ("width", "mask", "bits")

    width: int
    mask: int  # bit i set iff position i holds 0 or 1
    bits: int  # bit i set iff position i holds 1 (subset of mask)

    def __init__(self, width: int, mask: int, bits: int):
        if width < 1:
            raise ValueError(f"string length must be >= 1, got {width}")
        full = (1 << width) - 1
        if mask & ~full or bits & ~mask:
            raise ValueError("bit planes out of range for width")
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("TernaryString is immutable")

    @classmethod
    def parse(cls, text: str) -> "TernaryString":
        """Parse a word written with characters '0', '1', '*'."""
        mask = bits = 0
        for i, ch in enumerate(text):
            if ch == "0":
                mask |= 1 << i
            elif ch == "1":
                mask |= 1 << i
                bits |= 1 << i
            elif ch != "*":
                raise ValueError(f"invalid symbol {ch!r} in {text!r}")
        return cls(len(text), mask, bits)

    @classmethod
    def jokers(cls, width: int) -> "TernaryString":
        """The all-joker string *^width."""
        return cls(width, 0, 0)

    @property
    def text(self) -> str:
        return "".join(self[i] for i in range(self.width))

    def __getitem__(self, i: int) -> str:
        if not 0 <= i < self.width:
            raise IndexError(i)
        if not self.mask >> i & 1:
            return "*"
        return "1" if self.bits >> i & 1 else "0"

    def __iter__(self) -> Iterator[str]:
        return (self[i] for i in range(self.width))

    def __len__(self) -> int:
        return self.width

    def non_joker_count(self) -> int:
        """Number of positions holding 0 or 1."""
        return self.mask.bit_count()

    def concat(self, other: "TernaryString") -> "TernaryString":
        return TernaryString(
            self.width + other.width,
            self.mask | other.mask << self.width,
            self.bits | other.bits << self.width,
        )

    def with_symbol(self, position: int, symbol: str) -> "TernaryString":
        """Copy with 1-based `position` replaced by `symbol`."""
        if not 1 <= position <= self.width:
            raise ValueError(f"position {position} out of range 1..{self.width}")
        i = position - 1
        mask, bits = self.mask & ~(1 << i), self.bits & ~(1 << i)
        if symbol == "0":
            mask |= 1 << i
        elif symbol == "1":
            mask |= 1 << i
            bits |= 1 << i
        elif symbol != "*":
            raise ValueError(f"invalid symbol {symbol!r}")
        return TernaryString(self.width, mask, bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TernaryString)
            and self.width == other.width
            and self.mask == other.mask
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.width, self.mask, self.bits))

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"TernaryString({self.text!r})"


def dist(u: TernaryString, v: TernaryString) -> int:
    """Positions where u and v hold opposite binary digits (jokers never count)."""
    if u.width != v.width:
        raise ValueError(f"length mismatch: {u.width} vs {v.width}")
    return ((u.bits ^ v.bits) & u.mask & v.mask).bit_count()


@dataclass(frozen=True)
class CodeList:
    """Ordered list of equal-length ternary strings; duplicates allowed.

    `width` is the common string length.  An empty list carries an explicit
    width so the algebra stays total on degenerate operands.
    """

    strings: tuple[TernaryString, ...]
    width: int

    def __init__(self, strings: Iterable[TernaryString], width: int | None = None):
        strings = tuple(strings)
        if width is None:
            if not strings:
                raise ValueError("empty CodeList needs an explicit width")
            width = strings[0].width
        for s in strings:
            if s.width != width:
                raise ValueError(f"width mismatch: expected {width}, got {s.width} in {s}")
        object.__setattr__(self, "strings", strings)
        object.__setattr__(self, "width", width)

    @classmethod
    def of(cls, *texts: str, width: int | None = None) -> "CodeList":
        return cls((TernaryString.parse(t) for t in texts), width)

    @classmethod
    def empty(cls, width: int) -> "CodeList":
        return cls((), width)

    @property
    def size(self) -> int:
        return len(self.strings)

    def texts(self) -> list[str]:
        return [s.text for s in self.strings]

    def __len__(self) -> int:
        return len(self.strings)

    def __iter__(self) -> Iterator[TernaryString]:
        return iter(self.strings)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return CodeList(self.strings[i], self.width)
        return self.strings[i]

    def __add__(self, other: "CodeList") -> "CodeList":
        """List sum: entries of self followed by entries of other."""
        if not isinstance(other, CodeList):
            return NotImplemented
        if self.strings and other.strings and self.width != other.width:
            raise ValueError(f"sum needs equal widths, got {self.width} and {other.width}")
        width = self.width if self.strings else other.width
        return CodeList(self.strings + other.strings, width)

    def __mul__(self, other):
        """`A * B` is concatenation (row-major product); `A * n` repeats A n times."""
        if isinstance(other, CodeList):
            return CodeList(
                (u.concat(v) for u in self.strings for v in other.strings),
                self.width + other.width,
            )
        if isinstance(other, int):
            return _repeat(self, other)
        return NotImplemented

    def __rmul__(self, n):
        if isinstance(n, int):
            return _repeat(self, n)
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(self.texts())
        return f"CodeList([{inner}], width={self.width})"

    # Bit planes as (n, nwords) uint64 arrays, lazily built and cached;
    # the all-pairs checks below chew through these instead of string pairs.
    def planes(self) -> tuple[np.ndarray, np.ndarray]:
        cached = getattr(self, "_planes", None)
        if cached is None:
            nwords = max(1, -(-self.width // _WORD))
            n = len(self.strings)
            masks = np.zeros((n, nwords), dtype=np.uint64)
            bits = np.zeros((n, nwords), dtype=np.uint64)
            word_mask = (1 << _WORD) - 1
            for i, s in enumerate(self.strings):
                m, b = s.mask, s.bits
                for w in range(nwords):
                    masks[i, w] = m >> (w * _WORD) & word_mask
                    bits[i, w] = b >> (w * _WORD) & word_mask
            cached = (masks, bits)
            object.__setattr__(self, "_planes", cached)
        return cached


def _repeat(code: CodeList, n: int) -> CodeList:
    if n < 1:
        raise ValueError(f"scalar repetition needs n >= 1, got {n}")
    return CodeList(code.strings * n, code.width)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a code check; truthy iff it passed.

    On failure `pair` holds the first offending index pair (row-major order
    over i < j) and `distance` the offending value.
    """

    ok: bool
    pair: tuple[int, int] | None = None
    distance: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "pass"
        i, j = self.pair
        return f"fail: pair ({i}, {j}) at distance {self.distance}"


def pairwise_distances(code: CodeList) -> np.ndarray:
    """Full n x n matrix of pairwise joker-aware distances."""
    masks, bits = code.planes()
    n = len(code)
    out = np.zeros((n, n), dtype=np.int64)
    for w in range(masks.shape[1]):
        m, b = masks[:, w], bits[:, w]
        passing = (b[:, None] ^ b[None, :]) & m[:, None] & m[None, :]
        out += np.bitwise_count(passing).astype(np.int64)
    return out


def _first_violation(code: CodeList, k: int) -> tuple[int, int, int] | None:
    """First (i, j, distance) with i < j violating 1 <= dist <= k, else None.

    Runs in row blocks over the strict upper triangle so large lists never
    materialize an n x n matrix.
    """
    masks, bits = code.planes()
    n = len(code)
    block = 512
    nwords = masks.shape[1]
    for start in range(0, n - 1, block):
        stop = min(start + block, n)
        lo = start + 1  # columns j <= start can never satisfy j > i here
        d = np.zeros((stop - start, n - lo), dtype=np.uint16)
        for w in range(nwords):
            m, b = masks[:, w], bits[:, w]
            mb, bb = m[start:stop, None], b[start:stop, None]
            passing = (bb ^ b[None, lo:]) & mb & m[None, lo:]
            d += np.bitwise_count(passing)
        bad = (d == 0) | (d > k)
        rows = np.arange(start, stop)[:, None]
        cols = np.arange(lo, n)[None, :]
        bad &= cols > rows
        if bad.any():
            i_off, j_off = np.argwhere(bad)[0]
            return start + int(i_off), lo + int(j_off), int(d[i_off, j_off])
    return None


def is_k_neighborly(code: CodeList, k: int) -> Verdict:
    """Check that every pair of strings is at distance in [1, k].

    A single-string code passes vacuously.  Empty codes are rejected: the
    property is undefined, not failed.
    """
    if len(code) == 0:
        raise ValueError("k-neighborliness is undefined for an empty code")
    if not 1 <= k <= code.width:
        raise ValueError(f"need 1 <= k <= width, got k={k}, width={code.width}")
    if len(code) == 1:
        return Verdict(True)
    hit = _first_violation(code, k)
    if hit is None:
        return Verdict(True)
    i, j, d = hit
    return Verdict(False, (i, j), d)


# Normalized-box view: 0 -> [0, 1/2], 1 -> [1/2, 1], * -> [0, 1].
INTERVALS = {"0": (0.0, 0.5), "1": (0.5, 1.0), "*": (0.0, 1.0)}
_SYMBOL_OF = {v: k for k, v in INTERVALS.items()}


@dataclass(frozen=True)
class NormalizedBox:
    """Product of d factors, each [0,1/2], [1/2,1] or [0,1]."""

    factors: tuple[tuple[float, float], ...]

    def __post_init__(self):
        for f in self.factors:
            if f not in _SYMBOL_OF:
                raise ValueError(f"not a normalized factor: {f}")

    def to_string(self) -> TernaryString:
        return TernaryString.parse("".join(_SYMBOL_OF[f] for f in self.factors))

    def intersection_dimension(self, other: "NormalizedBox") -> int:
        """Dimension of the intersection box: dims where the factors overlap
        in more than a point."""
        if len(self.factors) != len(other.factors):
            raise ValueError("dimension mismatch")
        dim = 0
        for (a0, a1), (b0, b1) in zip(self.factors, other.factors):
            if min(a1, b1) - max(a0, b0) > 0:
                dim += 1
        return dim


def to_boxes(code: CodeList) -> list[NormalizedBox]:
    """Positionwise box view of every string in the code."""
    return [
        NormalizedBox(tuple(INTERVALS[ch] for ch in s)) for s in code
    ]


def boxes_to_code(boxes: Sequence[NormalizedBox]) -> CodeList:
    return CodeList(b.to_string() for b in boxes)
