"""Game rules (moves, passes, captures) and the trapped/k-trapped predicates.

The cops move all pawns in one turn and may congregate; either player may
pass.  A robber is *trapped* when every edge at his vertex has a cop within
distance 2 along a path using that edge; he is *m-trapped* when every
non-pass move admits a cop reply that leaves him (m-1)-trapped, bottoming
out at trapped.  These are structural probes: the solver, not the
predicates, is the authority on the game value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph
from .solver import cop_move_multisets


class Side(enum.Enum):
    COPS = 0
    ROBBER = 1


class CapturedStateError(ValueError):
    """Predicate applied to a state where the robber is already caught."""


@dataclass(frozen=True)
class GameState:
    """Cop multiset (sorted, canonical), robber vertex, side to move."""

    cops: tuple[int, ...]
    robber: int
    to_move: Side

    def __post_init__(self):
        if tuple(sorted(self.cops)) != self.cops:
            raise ValueError(f"cop positions must be sorted: {self.cops}")


@dataclass(frozen=True)
class Move:
    """Destination per pawn; staying put encodes a pass."""

    side: Side
    destinations: tuple[int, ...]


def _check_state(g: Graph, s: GameState) -> None:
    if not s.cops:
        raise ValueError("state needs at least one cop")
    for c in s.cops:
        if not (0 <= c < g.vertex_count):
            raise ValueError(f"cop vertex {c} out of range")
    if not (0 <= s.robber < g.vertex_count):
        raise ValueError(f"robber vertex {s.robber} out of range")


def is_capture(s: GameState) -> bool:
    return s.robber in s.cops


def legal_moves(g: Graph, s: GameState) -> list[GameState]:
    """Successor states; captured states are terminal and have none."""
    _check_state(g, s)
    if is_capture(s):
        return []
    if s.to_move is Side.COPS:
        return [
            GameState(cops=dest, robber=s.robber, to_move=Side.ROBBER)
            for dest in cop_move_multisets(g, s.cops)
        ]
    return [
        GameState(cops=s.cops, robber=r, to_move=Side.COPS)
        for r in (s.robber, *g.adjacency[s.robber])
    ]


def trapped(g: Graph, cops, robber: int) -> bool:
    """Every robber edge is covered by a cop within 2 along that edge.

    A cop covers the edge {robber, v} from v itself or from any neighbor of
    v other than the robber.  Vacuously true for an isolated robber.
    """
    cop_set = set(cops)
    if robber in cop_set:
        raise CapturedStateError(f"robber {robber} already caught")
    for v in g.adjacency[robber]:
        if v in cop_set:
            continue
        if any(w != robber and w in cop_set for w in g.adjacency[v]):
            continue
        return False
    return True


MAX_TRAP_DEPTH = 4


def n_trapped(g: Graph, cops, robber: int, depth: int = 2, *, max_depth: int = MAX_TRAP_DEPTH) -> bool:
    """Every non-pass robber move admits a cop reply that (depth-1)-traps him.

    depth=2 bottoms out at trapped; a robber move onto a cop, or one the
    cops can step onto, counts as success for the cops.  Passing is ignored
    as a robber option by definition.  Depth is capped to keep exhaustive
    scans desk-scale.
    """
    if depth < 2:
        raise ValueError(f"depth must be >= 2, got {depth}")
    if depth > max_depth:
        raise ValueError(f"depth {depth} exceeds cap {max_depth}")
    cop_set = set(cops)
    if robber in cop_set:
        raise CapturedStateError(f"robber {robber} already caught")
    for u in g.adjacency[robber]:
        if u in cop_set:
            continue  # robber walked into a cop
        ok = False
        for reply in cop_move_multisets(g, cops):
            if u in reply:
                ok = True  # cops capture on their turn
            elif depth == 2:
                ok = trapped(g, reply, u)
            else:
                ok = n_trapped(g, reply, u, depth - 1, max_depth=max_depth)
            if ok:
                break
        if not ok:
            return False
    return True
