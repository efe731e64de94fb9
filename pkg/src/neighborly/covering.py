"""Codes as bipartite clique coverings of complete graphs, and back.

A width-d code of size n maps to a covering of K_n: vertex i is string i,
and column j spans the bipartite clique with X_j = {i : string i has 0 at j}
and Y_j = {i : 1 at j}.  An edge {i, j} then lies in exactly dist(u_i, u_j)
cliques, so a k-neighborly code yields a k-covering (every edge covered
between 1 and k times).  Vertices are 1-indexed throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .strings import CodeList, TernaryString, pairwise_distances


@dataclass(frozen=True)
class BipartiteCovering:
    """Bipartite cliques (X_i, Y_i) over the vertex set {1..n_vertices}."""

    n_vertices: int
    cliques: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("covering needs at least one vertex")
        vertices = range(1, self.n_vertices + 1)
        for idx, (x, y) in enumerate(self.cliques):
            if not x or not y:
                raise ValueError(f"clique {idx} has an empty side")
            if x & y:
                raise ValueError(f"clique {idx} sides overlap: {sorted(x & y)}")
            if not (x | y) <= set(vertices):
                raise ValueError(f"clique {idx} uses vertices outside 1..{self.n_vertices}")


@dataclass(frozen=True)
class CoverVerdict:
    """Truthy iff every edge is covered between 1 and k times."""

    ok: bool
    edge: tuple[int, int] | None = None
    count: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "pass"
        return f"fail: edge {self.edge} covered {self.count} times"


def code_to_covering(code: CodeList, check: bool = True) -> BipartiteCovering:
    """Covering of K_|code| induced by the code's columns.

    Columns whose 0-side or 1-side is empty span nothing and are dropped,
    so the clique count equals the number of active dimensions (<= width).
    With `check` on, any pair at distance 0 is rejected: its edge could
    never be covered.
    """
    if len(code) == 0:
        raise ValueError("cannot build a covering from an empty code")
    if check and len(code) > 1:
        d = pairwise_distances(code)
        for i in range(len(code)):
            for j in range(i + 1, len(code)):
                if d[i, j] == 0:
                    raise ValueError(
                        f"strings {i} and {j} are at distance 0; edge ({i + 1}, {j + 1}) "
                        "would be uncovered"
                    )
    cliques = []
    for col in range(code.width):
        x = frozenset(i + 1 for i, s in enumerate(code) if s[col] == "0")
        y = frozenset(i + 1 for i, s in enumerate(code) if s[col] == "1")
        if x and y:
            cliques.append((x, y))
    return BipartiteCovering(n_vertices=len(code), cliques=tuple(cliques))


def verify_covering(cov: BipartiteCovering, k: int) -> CoverVerdict:
    """Every edge of K_n must lie in at least 1 and at most k cliques."""
    if k < 1:
        raise ValueError(f"covering multiplicity k must be >= 1, got {k}")
    n = cov.n_vertices
    counts = [[0] * (n + 1) for _ in range(n + 1)]
    for x, y in cov.cliques:
        for i in x:
            for j in y:
                a, c = min(i, j), max(i, j)
                counts[a][c] += 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not 1 <= counts[i][j] <= k:
                return CoverVerdict(False, (i, j), counts[i][j])
    return CoverVerdict(True)


def covering_to_code(cov: BipartiteCovering) -> CodeList:
    """Inverse map: one coordinate per clique, one string per vertex."""
    if not cov.cliques:
        if cov.n_vertices == 1:
            raise ValueError("K_1 with no cliques maps to a width-0 string, which is unsupported")
        raise ValueError(f"K_{cov.n_vertices} cannot be covered by zero cliques")
    strings = []
    for v in range(1, cov.n_vertices + 1):
        chars = []
        for x, y in cov.cliques:
            chars.append("0" if v in x else "1" if v in y else "*")
        strings.append(TernaryString.parse("".join(chars)))
    return CodeList(strings)
