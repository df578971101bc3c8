"""Exact computation workbench for cops and robbers on generalized Petersen
graphs: construction and classification of GP(n,k), exact game solving by
backward induction, trap-structure detection, and reproduction of the
published girth/cop-number tables."""

from .graph import (
    Graph,
    bfs_distances,
    dismantlable,
    format_graph_file,
    from_edge_list,
    girth,
    has_pitfall,
    parse_graph_file,
    render_dot,
)
from .gp import (
    ClassificationReport,
    GpParams,
    RelationTag,
    brute_force_isomorphic,
    build_gp,
    classify,
    iso_equivalent,
    min_k,
    predicted_girth,
)
from .game import GameState, Move, Side, is_capture, legal_moves, n_trapped, trapped
from .solver import (
    SolveResult,
    cop_number,
    cops_win,
    naive_minimax_oracle,
    optimal_cop_move,
)
from .structure import (
    CoincidenceRelation,
    CyclePair,
    admits_two_trap,
    candidate_relations,
    cycles_of_length_through,
    distance4_coincidences,
    survey_two_trap_families,
    two_trap_pairs,
    two_trapped_conformance,
)
from .tables import TableRow, cache_load, cache_store, cop4_table, full_table

__version__ = "0.1.0"
