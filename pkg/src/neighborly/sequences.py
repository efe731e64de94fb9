"""Integer sequences behind the construction: a(n), b(d), c(n).

a(n) is the non-decreasing list of all integers >= 2 in which every number
of the form 3*2^r appears twice.  b(d) accumulates it (b(2) = 4 and
b(d) = 4 + a(1) + ... + a(d-2)); it is the size of the generated
2-neighborly code of width d.  c(n) is the dual: the least width whose
code size reaches n, normalized so that c(b(d)) = d.

Everything is exact integer arithmetic.
"""

from __future__ import annotations

from functools import lru_cache


def _is_three_times_power_of_two(m: int) -> bool:
    q, r = divmod(m, 3)
    return r == 0 and q >= 1 and q & (q - 1) == 0


@lru_cache(maxsize=None)
def _a_prefix(n: int) -> tuple[int, ...]:
    """First n terms of the a-sequence."""
    terms: list[int] = []
    m = 2
    while len(terms) < n:
        terms.append(m)
        if _is_three_times_power_of_two(m) and len(terms) < n:
            terms.append(m)
        m += 1
    return tuple(terms)


def a(n: int) -> int:
    """n-th term (1-based) of the doubled-3*2^r increment sequence."""
    if n < 1:
        raise ValueError(f"a(n) needs n >= 1, got {n}")
    return _a_prefix(n)[n - 1]


def b(d: int) -> int:
    """Size of the width-d code: 4 plus the first d-2 increments."""
    if d < 2:
        raise ValueError(f"b(d) needs d >= 2, got {d}")
    return 4 + sum(_a_prefix(d - 2))


def level_of(d: int) -> int:
    """The unique r >= 0 with 3*2^r + r + 1 <= d <= 6*2^r + r + 1 (d >= 4)."""
    if d < 4:
        raise ValueError(f"no level below d = 4, got {d}")
    r = 0
    while not 3 * 2**r + r + 1 <= d <= 6 * 2**r + r + 1:
        r += 1
    return r


def b_closed_form(d: int) -> int:
    """Closed form of b(d) for d >= 4, evaluated in exact integers."""
    r = level_of(d)
    quad = d * (d - 2 * r - 3)
    tri = (r + 1) * (r + 2)
    assert quad % 2 == 0 and tri % 2 == 0
    return quad // 2 + 6 * 2**r + tri // 2


def c(n: int) -> int:
    """Least width d whose code size b(d) reaches n; c(2) = 1."""
    if n < 2:
        raise ValueError(f"c(n) needs n >= 2, got {n}")
    if n == 2:
        return 1
    d = 2
    while b(d) < n:
        d += 1
    return d


def distribution_bounds(
    mu0: int, big_m0: int, kappa0: int, big_k0: int, k: int
) -> tuple[int, int]:
    """Bounds on per-string non-joker counts after k rounds of compounding.

    Given the seed statistics (min/max over the paired codes, min/max over
    the C-lists), every string at level k has its 0/1 count within
    [min(2*kappa0 - 1, mu0) + 2k, max(2*big_k0 - 1, big_m0) + 2k].
    """
    if mu0 > big_m0 or kappa0 > big_k0:
        raise ValueError("seed statistics must satisfy mu0 <= M0 and kappa0 <= K0")
    return (min(2 * kappa0 - 1, mu0) + 2 * k, max(2 * big_k0 - 1, big_m0) + 2 * k)


def known_max_code_size(k: int, d: int) -> int | None:
    """Exact n(k, d) where a formula or verified value exists, else None.

    Exact cases: n(1, d) = d + 1, n(d, d) = 2^d, n(d-1, d) = 3 * 2^(d-2),
    and n(2, d) = b(d) for d <= 7 (verified computationally).
    """
    if not 1 <= k <= d:
        return None
    if k == 1:
        return d + 1
    if k == d:
        return 2**d
    if k == d - 1:
        return 3 * 2 ** (d - 2)
    if k == 2 and d <= 7:
        return b(d)
    return None
