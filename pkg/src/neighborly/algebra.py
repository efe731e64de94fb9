"""The four list operations (pairing, concatenation, sum, scalar) and blocks.

Conventions:
  * pairing(A, B) zips two equal-size lists into entrywise concatenations;
  * concat(A, B) is the row-major product list (|A|*|B| entries);
  * list_sum(A, B) appends B's entries after A's (equal widths);
  * scalar(n, A) repeats A n times (n >= 1);
  * block(rows) concatenates the cells of each row left to right, then sums
    the row results top to bottom.  Concatenation always binds before any
    pairing applied to a block's value.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

from .strings import CodeList


def pairing(a: CodeList, b: CodeList) -> CodeList:
    """Entrywise concatenation of two lists of equal size."""
    if len(a) != len(b):
        raise ValueError(f"pairing needs equal sizes, got {len(a)} and {len(b)}")
    return CodeList(
        (u.concat(v) for u, v in zip(a, b)),
        a.width + b.width,
    )


def concat(*lists: CodeList) -> CodeList:
    """Row-major product concatenation; associative under this order."""
    if not lists:
        raise ValueError("concat needs at least one operand")
    return reduce(lambda x, y: x * y, lists)


def list_sum(*lists: CodeList) -> CodeList:
    """Entries of each operand in order; operands must share a width."""
    if not lists:
        raise ValueError("list_sum needs at least one operand")
    return reduce(lambda x, y: x + y, lists)


def scalar(n: int, a: CodeList) -> CodeList:
    """A repeated n times; n = 0 is rejected (only positive repetitions exist)."""
    return n * a


def block(rows: Sequence[Iterable[CodeList]]) -> CodeList:
    """Concatenate each row's cells, then sum the rows."""
    if not rows:
        raise ValueError("block needs at least one row")
    return list_sum(*(concat(*row) for row in rows))
