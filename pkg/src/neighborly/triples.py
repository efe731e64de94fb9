"""Nice triples, the compound operator, seeds, and the code generator.

A triple (A, B, C) is *nice* when
  (1) every pair of strings in A is at distance <= 1,
  (2) |A| = |B| and the pairing A (+) B is a 2-neighborly code,
  (3) C is a 1-neighborly sublist of B (multiset containment) and every
      string of B is at distance <= 1 from every string of C.

Two nice triples with equal A-string width whose combined A-lists stay at
pairwise distance <= 1 are *concordant* and can be compounded into a larger
nice triple.  Folding planned multisets of the four seed triples yields,
for every width d >= 4, a 2-neighborly code of size b(d).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .algebra import block, concat, list_sum, pairing, scalar
from .sequences import b, level_of
from .strings import CodeList, TernaryString, dist, is_k_neighborly


@dataclass(frozen=True)
class Triple:
    """Lists (A, B, C) with |A| = |B| and width(C) = width(B).

    Parameters are derived from the lists on access, so they can never
    drift from the data: alpha/beta are the A/B string widths, delta their
    sum (the width of the paired code), n the list size and g = |C|.
    """

    a: CodeList
    b: CodeList
    c: CodeList

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError(f"|A| != |B|: {len(self.a)} vs {len(self.b)}")
        if self.c.width != self.b.width:
            raise ValueError(f"width(C) != width(B): {self.c.width} vs {self.b.width}")

    @property
    def alpha(self) -> int:
        return self.a.width

    @property
    def beta(self) -> int:
        return self.b.width

    @property
    def delta(self) -> int:
        return self.alpha + self.beta

    @property
    def g(self) -> int:
        return len(self.c)

    @property
    def n(self) -> int:
        return len(self.a)

    def params(self) -> tuple[int, int, int, int, int]:
        return (self.alpha, self.beta, self.delta, self.g, self.n)

    def paired(self) -> CodeList:
        """The code A (+) B carried by this triple."""
        return pairing(self.a, self.b)


class Seed(Enum):
    """The four base triples, in increasing B-width order."""

    FLAT = "flat"
    DAGGER = "dagger"
    DOUBLE_DAGGER = "double-dagger"
    SHARP = "sharp"


SEED_ORDER = (Seed.FLAT, Seed.DAGGER, Seed.DOUBLE_DAGGER, Seed.SHARP)

# Shared building blocks for the seed lists.
_H = CodeList.of("00", "01", "1*")
_G = CodeList.of("0", "1")
_L = CodeList.of("000", "001", "01*", "1**")


def _s(text: str) -> CodeList:
    return CodeList.of(text)


@lru_cache(maxsize=None)
def seed(which: Seed) -> Triple:
    """The literal seed triple; the paired codes are the four extremal
    2-neighborly codes of widths 4, 5, 6 and 7."""
    if which is Seed.FLAT:
        return Triple(
            a=3 * _s("00") + 3 * _s("01") + 3 * _s("1*"),
            b=3 * _H,
            c=_H,
        )
    if which is Seed.DAGGER:
        return Triple(
            a=4 * _s("00") + 4 * _s("01") + 4 * _s("1*"),
            b=3 * _L,
            c=_L,
        )
    if which is Seed.DOUBLE_DAGGER:
        return Triple(
            a=2 * _s("00") + 2 * _s("01") + 3 * _s("00") + 3 * _s("01") + 6 * _s("1*"),
            b=2 * (_s("0") * _G * _s("**")) + 2 * (_s("1") * _s("*") * _H) + _s("*") * _G * _H,
            c=_s("0") * _G * _s("**") + _s("1") * _s("*") * _H,
        )
    return Triple(
        a=2 * (3 * _s("00") + 3 * _s("01")) + 9 * _s("1*"),
        b=2 * (_s("0") * _H * _s("**")) + 2 * (_s("1") * _s("**") * _H) + _s("*") * _H * _H,
        c=_s("0") * _H * _s("**") + _s("1") * _s("**") * _H,
    )


@dataclass(frozen=True)
class NiceVerdict:
    """Truthy iff all three niceness conditions hold; otherwise names the
    first violated condition with the offending indices."""

    ok: bool
    condition: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _far_pair(code: CodeList) -> tuple[int, int, int] | None:
    """Some (i, j, d) with d = dist within the list > 1, else None.

    A-lists are duplicate-heavy, so compare distinct strings only and report
    first-occurrence indices.
    """
    firsts: dict[TernaryString, int] = {}
    for i, s in enumerate(code):
        firsts.setdefault(s, i)
    distinct = list(firsts.items())
    for i, (s, si) in enumerate(distinct):
        for u, ui in distinct[i + 1 :]:
            d = dist(s, u)
            if d > 1:
                return min(si, ui), max(si, ui), d
    return None


def _cross_far_pair(x: CodeList, y: CodeList) -> tuple[int, int, int] | None:
    """First (i, j, d) with d = dist(x[i], y[j]) > 1, else None."""
    xm, xb = x.planes()
    ym, yb = y.planes()
    d = np.zeros((len(x), len(y)), dtype=np.int64)
    for w in range(xm.shape[1]):
        passing = (xb[:, w][:, None] ^ yb[:, w][None, :]) & xm[:, w][:, None] & ym[:, w][None, :]
        d += np.bitwise_count(passing).astype(np.int64)
    bad = d > 1
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return int(i), int(j), int(d[i, j])
    return None


def is_nice(t: Triple) -> NiceVerdict:
    """Check conditions (1)-(3); recomputes everything from the lists."""
    # (1) A is pairwise at distance <= 1 (duplicates, hence distance 0, allowed).
    hit = _far_pair(t.a)
    if hit is not None:
        i, j, d = hit
        return NiceVerdict(False, 1, f"A pair ({i}, {j}) at distance {d}")
    # (2) A (+) B is 2-neighborly.
    verdict = is_k_neighborly(t.paired(), 2)
    if not verdict:
        return NiceVerdict(False, 2, f"A(+)B {verdict.describe()}")
    # (3) C is a 1-neighborly sublist of B, close to all of B.
    if t.g > 0:
        counts_b = Counter(t.b.strings)
        counts_c = Counter(t.c.strings)
        for s, cnt in counts_c.items():
            if counts_b[s] < cnt:
                return NiceVerdict(False, 3, f"C entry {s} exceeds its multiplicity in B")
        if len(t.c) > 1:
            verdict = is_k_neighborly(t.c, 1)
            if not verdict:
                return NiceVerdict(False, 3, f"C {verdict.describe()}")
        hit = _cross_far_pair(t.b, t.c)
        if hit is not None:
            i, j, d = hit
            return NiceVerdict(False, 3, f"B[{i}] vs C[{j}] at distance {d}")
    return NiceVerdict(True)


def is_concordant(t: Triple, u: Triple) -> bool:
    """Equal A-widths and the combined A-lists stay at pairwise distance <= 1."""
    if t.alpha != u.alpha:
        return False
    return _far_pair(t.a + u.a) is None


def _jokers(width: int) -> CodeList:
    return CodeList((TernaryString.jokers(width),))


def compound(t: Triple, u: Triple) -> Triple:
    """Combine two nice concordant triples into the next-level triple.

    The result's lists follow the three-row layout: prefix 0 keeps t's data,
    prefix 1 keeps u's padded with jokers, and the joint C-product fills the
    joker-prefixed rows.  Parameters obey
        alpha'' = alpha + 1,  beta'' = beta + beta' + 1,
        delta'' = delta + delta' - alpha + 2,
        g'' = g + g',         n'' = n + n' + g * g'.
    """
    if not is_concordant(t, u):
        raise ValueError("compound needs concordant triples (equal alpha, close A-lists)")
    zero, one, star = _s("0"), _s("1"), _s("*")
    a2 = block(
        [
            [zero, t.a],
            [zero, u.a],
            [scalar(t.g * u.g, concat(one, _jokers(t.alpha)))],
        ]
    )
    b2 = block(
        [
            [zero, t.b, _jokers(u.beta)],
            [one, _jokers(t.beta), u.b],
            [star, t.c, u.c],
        ]
    )
    c2 = block(
        [
            [zero, t.c, _jokers(u.beta)],
            [one, _jokers(t.beta), u.c],
        ]
    )
    result = Triple(a2, b2, c2)
    _check_compound(t, u, result)
    return result


def _check_compound(t: Triple, u: Triple, result: Triple) -> None:
    """Post-assembly guard; unreachable unless the operands were not nice."""
    expected = (
        t.alpha + 1,
        t.beta + u.beta + 1,
        t.delta + u.delta - t.alpha + 2,
        t.g + u.g,
        t.n + u.n + t.g * u.g,
    )
    if result.params() != expected:
        raise AssertionError(
            f"compound parameters {result.params()} do not match recurrences {expected}"
        )
    verdict = is_nice(result)
    if not verdict:
        raise AssertionError(f"compound produced a non-nice triple: {verdict.detail}")


def power(t: Triple, k: int) -> Triple:
    """k-fold self-compound: T_0 = T, T_{i+1} = T_i (x) T_i."""
    if k < 0:
        raise ValueError(f"power needs k >= 0, got {k}")
    for _ in range(k):
        t = compound(t, t)
    return t


@dataclass(frozen=True)
class DecompositionPlan:
    """A multiset of 2^k seed leaves whose balanced fold reaches width d."""

    d: int
    k: int
    leaves: tuple[Seed, ...]
    case_tag: str

    def __post_init__(self):
        if len(self.leaves) != 2**self.k:
            raise ValueError(f"plan needs 2^{self.k} leaves, got {len(self.leaves)}")
        if self.predicted_delta() != self.d:
            raise ValueError(
                f"plan predicts width {self.predicted_delta()}, requested {self.d}"
            )

    def predicted_delta(self) -> int:
        betas = {Seed.FLAT: 2, Seed.DAGGER: 3, Seed.DOUBLE_DAGGER: 4, Seed.SHARP: 5}
        return sum(betas[s] for s in self.leaves) + 2**self.k + self.k + 1


def plan_decomposition(d: int) -> DecompositionPlan:
    """Canonical two-consecutive-seed plan for width d >= 4.

    With rho = 3*2^k + k + 1 and rho', rho'', rho''' each 2^k further on,
    the plan uses (rho'-d) flats + (d-rho) daggers on [rho, rho'),
    (rho''-d) daggers + (d-rho') double-daggers on [rho', rho''), and
    (rho'''-d) double-daggers + (d-rho'') sharps on [rho'', rho'''].
    Lower seed's copies come first.
    """
    if d < 4:
        raise ValueError(f"no decomposition below d = 4, got {d}")
    k = level_of(d)
    step = 2**k
    rho = 3 * step + k + 1
    rho1, rho2, rho3 = rho + step, rho + 2 * step, rho + 3 * step
    if d < rho1:
        tag, lo, hi, count_lo = "a", Seed.FLAT, Seed.DAGGER, rho1 - d
    elif d < rho2:
        tag, lo, hi, count_lo = "a'", Seed.DAGGER, Seed.DOUBLE_DAGGER, rho2 - d
    else:
        tag, lo, hi, count_lo = "a''", Seed.DOUBLE_DAGGER, Seed.SHARP, rho3 - d
    if k == 0:
        tag = "single-seed-k0"
    leaves = (lo,) * count_lo + (hi,) * (step - count_lo)
    return DecompositionPlan(d=d, k=k, leaves=leaves, case_tag=tag)


def enumerate_plans(d: int) -> list[tuple[int, int, int, int]]:
    """All seed multisets (p, q, r, s) solving the decomposition system for d:
    p + q + r + s = 2^k and 2p + 3q + 4r + 5s = d - 2^k - k - 1.

    General solver kept for cross-checks; code generation uses the canonical
    two-seed plan only.
    """
    k = level_of(d)
    total = 2**k
    weight = d - total - k - 1
    out = []
    for p in range(total + 1):
        for q in range(total - p + 1):
            for r in range(total - p - q + 1):
                s = total - p - q - r
                if 2 * p + 3 * q + 4 * r + 5 * s == weight:
                    out.append((p, q, r, s))
    return out


def plan_from_multiset(d: int, p: int, q: int, r: int, s: int) -> DecompositionPlan:
    leaves = (
        (Seed.FLAT,) * p
        + (Seed.DAGGER,) * q
        + (Seed.DOUBLE_DAGGER,) * r
        + (Seed.SHARP,) * s
    )
    k = level_of(d)
    return DecompositionPlan(d=d, k=k, leaves=leaves, case_tag="general")


def build_triple(plan: DecompositionPlan) -> Triple:
    """Fold the plan's leaves by pairing adjacent entries, k rounds.

    All fold orders give congruent results; the fixed order makes outputs
    byte-for-byte reproducible.
    """
    level = [seed(s) for s in plan.leaves]
    while len(level) > 1:
        level = [compound(level[i], level[i + 1]) for i in range(0, len(level), 2)]
    return level[0]


def generate_code(d: int) -> CodeList:
    """A 2-neighborly code of width d and size b(d), for any d >= 2.

    Widths 2 and 3 predate the triple machinery and are fixed codes; from
    width 4 on the code is the paired A/B of the planned triple.
    """
    if d < 2:
        raise ValueError(f"generate_code needs d >= 2, got {d}")
    if d == 2:
        return CodeList.of("00", "01", "10", "11")
    if d == 3:
        return CodeList.of("000", "001", "010", "011", "10*", "11*")
    t = build_triple(plan_decomposition(d))
    return t.paired()


def zaks_code(d: int) -> CodeList:
    """The d+1 strings 0^(i-1) 1 *^(d-i), i = 1..d, plus 0^d; every pair is
    at distance exactly 1 (the maximum 1-neighborly code)."""
    if d < 1:
        raise ValueError(f"zaks_code needs d >= 1, got {d}")
    texts = ["0" * (i - 1) + "1" + "*" * (d - i) for i in range(1, d + 1)]
    texts.append("0" * d)
    return CodeList.of(*texts)


def _count_range(code: CodeList) -> tuple[int, int]:
    if len(code) == 0:
        return (0, 0)
    counts = [s.non_joker_count() for s in code]
    return (min(counts), max(counts))


def triple_stats(t: Triple) -> tuple[int, int, int, int]:
    """(mu, M, kappa, K): min/max non-joker counts over A (+) B and over C."""
    mu, big_m = _count_range(t.paired())
    kappa, big_k = _count_range(t.c)
    return (mu, big_m, kappa, big_k)


def seed_stats() -> tuple[int, int, int, int]:
    """Aggregated (mu0, M0, kappa0, K0) over the four seeds."""
    stats = [triple_stats(seed(s)) for s in SEED_ORDER]
    return (
        min(s[0] for s in stats),
        max(s[1] for s in stats),
        min(s[2] for s in stats),
        max(s[3] for s in stats),
    )
