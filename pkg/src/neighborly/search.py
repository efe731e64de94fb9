"""Exact computation of n(k, d) for small d by maximum-clique search.

The compatibility graph has one vertex per string in {0,1,*}^d and an edge
wherever 1 <= dist <= k; a k-neighborly code is exactly a clique.  The
solver is a branch-and-bound with a greedy-coloring upper bound over bitset
candidate sets.  Optional symmetry reduction restricts branch roots to the
d+1 canonical strings 0^j *^(d-j): coordinate permutations and
per-coordinate 0/1 swaps preserve the distance, and every string is
equivalent to a canonical one under that group.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .sequences import b
from .strings import CodeList, TernaryString, is_k_neighborly

_MAX_D = 8
_BUDGET_CHECK_MASK = (1 << 14) - 1  # wall-clock test every 2^14 nodes


@dataclass
class SearchConfig:
    k: int
    d: int
    time_budget: float = 300.0  # seconds
    symmetry_reduction: bool = True
    lower_bound_seed: CodeList | None = None

    def __post_init__(self):
        if not 1 <= self.k <= self.d:
            raise ValueError(f"need 1 <= k <= d, got k={self.k}, d={self.d}")
        if self.d > _MAX_D:
            raise ValueError(f"search space 3^d is enumerable only up to d={_MAX_D}")
        if self.time_budget <= 0:
            raise ValueError("time budget must be positive")


@dataclass
class SearchResult:
    best_size: int
    best_code: CodeList
    proven_optimal: bool
    nodes_explored: int
    elapsed: float


class _BudgetExhausted(Exception):
    pass


def _enumerate_vertices(d: int) -> list[TernaryString]:
    """All of {0,1,*}^d, densest first, then lexicographic by text."""
    words = [TernaryString.parse("".join(p)) for p in product("01*", repeat=d)]
    words.sort(key=lambda s: (-s.non_joker_count(), s.text))
    return words


def _adjacency(vertices: list[TernaryString], k: int) -> list[int]:
    """Row bitmasks of the compatibility graph, built wordwise in numpy."""
    n = len(vertices)
    masks = np.array([v.mask for v in vertices], dtype=np.uint64)
    bits = np.array([v.bits for v in vertices], dtype=np.uint64)
    adj = []
    for i in range(n):
        passing = (bits[i] ^ bits) & masks[i] & masks
        dists = np.bitwise_count(passing)
        row = (dists >= 1) & (dists <= k)
        row[i] = False
        adj.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return adj


class _CliqueSolver:
    """Tomita-style max clique over int bitsets with greedy-coloring bounds."""

    def __init__(self, adj: list[int], deadline: float):
        self.adj = adj
        self.deadline = deadline
        self.nodes = 0
        self.best_size = 0
        self.best_clique: list[int] = []

    def _tick(self):
        self.nodes += 1
        if self.nodes & _BUDGET_CHECK_MASK == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted

    def _color_order(self, cand: int) -> list[tuple[int, int]]:
        """Greedy coloring of the candidate set; returns (vertex, color)
        pairs in increasing color order."""
        order = []
        color = 0
        remaining = cand
        while remaining:
            color += 1
            members = remaining
            while members:
                v = (members & -members).bit_length() - 1
                order.append((v, color))
                members &= ~(1 << v)
                members &= ~self.adj[v]
                remaining &= ~(1 << v)
        return order

    def expand(self, clique: list[int], cand: int):
        self._tick()
        order = self._color_order(cand)
        for v, color in reversed(order):
            if len(clique) + color <= self.best_size:
                return
            clique.append(v)
            if len(clique) > self.best_size:
                self.best_size = len(clique)
                self.best_clique = clique.copy()
            nxt = cand & self.adj[v]
            if nxt:
                self.expand(clique, nxt)
            clique.pop()
            cand &= ~(1 << v)


def max_code(cfg: SearchConfig) -> SearchResult:
    """Largest k-neighborly code in {0,1,*}^d, proven when within budget.

    On budget exhaustion the incumbent is still a valid code and
    best_size a valid lower bound, with proven_optimal False.
    """
    start = time.monotonic()
    vertices = _enumerate_vertices(cfg.d)
    index_of = {v: i for i, v in enumerate(vertices)}
    adj = _adjacency(vertices, cfg.k)
    solver = _CliqueSolver(adj, start + cfg.time_budget)

    if cfg.lower_bound_seed is not None:
        incumbent = cfg.lower_bound_seed
        if incumbent.width != cfg.d:
            raise ValueError("seed code width does not match d")
        if not is_k_neighborly(incumbent, cfg.k):
            raise ValueError("seed code is not k-neighborly")
        solver.best_size = len(incumbent)
        solver.best_clique = [index_of[s] for s in incumbent]

    proven = True
    try:
        if cfg.symmetry_reduction:
            # Any clique maps, by an automorphism, to one containing a
            # canonical root, so rooting at the d+1 canonicals is exhaustive.
            for j in range(cfg.d, -1, -1):
                root = index_of[TernaryString.parse("0" * j + "*" * (cfg.d - j))]
                neighbors = adj[root]
                if solver.best_size < 1:
                    solver.best_size = 1
                    solver.best_clique = [root]
                solver.expand([root], neighbors)
        else:
            full = (1 << len(vertices)) - 1
            solver.expand([], full)
    except _BudgetExhausted:
        proven = False

    code = CodeList([vertices[i] for i in sorted(solver.best_clique)], cfg.d)
    return SearchResult(
        best_size=solver.best_size,
        best_code=code,
        proven_optimal=proven,
        nodes_explored=solver.nodes,
        elapsed=time.monotonic() - start,
    )


@dataclass
class IdentityReport:
    """One exact-value family member checked against the search."""

    family: str
    k: int
    d: int
    expected: int
    found: int
    proven: bool

    @property
    def agrees(self) -> bool:
        return self.proven and self.expected == self.found


def verify_extremal_identities(d_max: int, time_budget: float = 300.0) -> list[IdentityReport]:
    """Run the search across the known exact families up to d_max <= 5:
    n(1,d) = d+1, n(d,d) = 2^d, n(d-1,d) = 3*2^(d-2), n(2,d) = b(d)."""
    if d_max > 5:
        raise ValueError("identity sweep is limited to d_max <= 5")
    cases: list[tuple[str, int, int, int]] = []
    for d in range(1, d_max + 1):
        cases.append(("n(1,d)=d+1", 1, d, d + 1))
    for d in range(1, d_max + 1):
        cases.append(("n(d,d)=2^d", d, d, 2**d))
    for d in range(2, d_max + 1):
        cases.append(("n(d-1,d)=3*2^(d-2)", d - 1, d, 3 * 2 ** (d - 2)))
    for d in range(2, d_max + 1):
        cases.append(("n(2,d)=b(d)", 2, d, b(d)))
    report = []
    for family, k, d, expected in cases:
        result = max_code(SearchConfig(k=k, d=d, time_budget=time_budget))
        report.append(
            IdentityReport(family, k, d, expected, result.best_size, result.proven_optimal)
        )
    return report
