"""Toolkit for k-neighborly ternary codes, bipartite clique coverings of
complete graphs, and the joker splitting game."""

from .algebra import block, concat, list_sum, pairing, scalar
from .covering import BipartiteCovering, code_to_covering, covering_to_code, verify_covering
from .game import GameState, Move, apply, hint, legal_moves, solve, split, undo
from .search import SearchConfig, SearchResult, max_code, verify_extremal_identities
from .sequences import a, b, b_closed_form, c, distribution_bounds
from .strings import CodeList, TernaryString, dist, is_k_neighborly, to_boxes
from .triples import (
    DecompositionPlan,
    Seed,
    Triple,
    build_triple,
    compound,
    generate_code,
    is_concordant,
    is_nice,
    plan_decomposition,
    power,
    seed,
    triple_stats,
    zaks_code,
)

__version__ = "0.1.0"
