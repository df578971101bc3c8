"""Exact k-cop game decision by backward induction over the dense state space.

The game value is the least fixpoint of the attractor equations: a terminal
state (robber on a cop) is cop-win; a cops-to-move state is cop-win iff some
cop move reaches a cop-win state; a robber-to-move state is cop-win iff every
robber move (pass included) lands in one.  Infinite play is a robber win, so
the fixpoint is computed by reverse BFS from the capture states, decrementing
a remaining-successor counter on robber states.  Each transition is visited
O(1) times.

Both move relations are symmetric (stay-or-step along undirected edges), so
predecessors are enumerated with the same tables as successors: a precomputed
cop-multiset move graph, and closed neighborhoods for the robber.
"""

from __future__ import annotations

import itertools
import time as _time
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from . import indexing
from .graph import Graph
from .indexing import COPS_TO_MOVE, ROBBER_TO_MOVE

DEFAULT_MAX_COPS = 4
DEFAULT_MEMORY_BUDGET = 2 * 1024**3  # bytes; refuse rather than thrash


class GraphNotConnectedError(ValueError):
    pass


class MemoryBudgetError(RuntimeError):
    """State space too large for the configured budget."""

    def __init__(self, states: int, est_bytes: int, budget: int):
        self.states = states
        self.est_bytes = est_bytes
        self.budget = budget
        super().__init__(
            f"solve needs ~{est_bytes / 1e6:.0f} MB for {states} states, "
            f"budget is {budget / 1e6:.0f} MB"
        )


def closed_neighborhood_csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """CSR arrays of {v} union N(v), ascending within each row."""
    indptr = np.zeros(g.vertex_count + 1, dtype=np.int64)
    rows = []
    for v in range(g.vertex_count):
        row = sorted((v, *g.adjacency[v]))
        rows.append(row)
        indptr[v + 1] = indptr[v] + len(row)
    idx = np.fromiter(itertools.chain.from_iterable(rows), dtype=np.int64, count=int(indptr[-1]))
    return indptr, idx


@njit(cache=True)
def _count_move_rows(closed_indptr, closed_idx, binom, v, c, m_count, buf):
    """Pass 1 of the multiset move graph: deduped successor count per rank."""
    counts = np.zeros(m_count, dtype=np.int64)
    mem = np.empty(c, dtype=np.int64)
    pos = np.empty(c, dtype=np.int64)
    dest = np.empty(c, dtype=np.int64)
    for m in range(m_count):
        indexing.multiset_unrank(binom, m, c, mem)
        nfound = 0
        for j in range(c):
            pos[j] = 0
        while True:
            for j in range(c):
                dest[j] = closed_idx[closed_indptr[mem[j]] + pos[j]]
            # insertion sort (c <= 4)
            for a in range(1, c):
                key = dest[a]
                b = a - 1
                while b >= 0 and dest[b] > key:
                    dest[b + 1] = dest[b]
                    b -= 1
                dest[b + 1] = key
            r = indexing.multiset_rank(binom, dest, c)
            dup = False
            for t in range(nfound):
                if buf[t] == r:
                    dup = True
                    break
            if not dup:
                buf[nfound] = r
                nfound += 1
            # odometer
            j = c - 1
            while j >= 0:
                pos[j] += 1
                if pos[j] < closed_indptr[mem[j] + 1] - closed_indptr[mem[j]]:
                    break
                pos[j] = 0
                j -= 1
            if j < 0:
                break
        counts[m] = nfound
    return counts


@njit(cache=True)
def _fill_move_rows(closed_indptr, closed_idx, binom, v, c, m_count, indptr, out, buf):
    """Pass 2: write the deduped successor ranks."""
    mem = np.empty(c, dtype=np.int64)
    pos = np.empty(c, dtype=np.int64)
    dest = np.empty(c, dtype=np.int64)
    for m in range(m_count):
        indexing.multiset_unrank(binom, m, c, mem)
        nfound = 0
        for j in range(c):
            pos[j] = 0
        while True:
            for j in range(c):
                dest[j] = closed_idx[closed_indptr[mem[j]] + pos[j]]
            for a in range(1, c):
                key = dest[a]
                b = a - 1
                while b >= 0 and dest[b] > key:
                    dest[b + 1] = dest[b]
                    b -= 1
                dest[b + 1] = key
            r = indexing.multiset_rank(binom, dest, c)
            dup = False
            for t in range(nfound):
                if buf[t] == r:
                    dup = True
                    break
            if not dup:
                buf[nfound] = r
                nfound += 1
            j = c - 1
            while j >= 0:
                pos[j] += 1
                if pos[j] < closed_indptr[mem[j] + 1] - closed_indptr[mem[j]]:
                    break
                pos[j] = 0
                j -= 1
            if j < 0:
                break
        base = indptr[m]
        for t in range(nfound):
            out[base + t] = buf[t]


@njit(cache=True)
def _attractor(move_indptr, move_idx, closed_indptr, closed_idx, binom, v, c, m_count):
    """Reverse-BFS least fixpoint.  Returns (win, capture_time_plies)."""
    num_states = m_count * v * 2
    win = np.zeros(num_states, dtype=np.uint8)
    tim = np.full(num_states, -1, dtype=np.int32)
    counter = np.zeros(m_count * v, dtype=np.int32)
    queue = np.empty(num_states, dtype=np.int64)

    for m in range(m_count):
        base = m * v
        for r in range(v):
            counter[base + r] = closed_indptr[r + 1] - closed_indptr[r]

    qh = 0
    mem = np.empty(c, dtype=np.int64)
    for m in range(m_count):
        indexing.multiset_unrank(binom, m, c, mem)
        prev = np.int64(-1)
        for j in range(c):
            r = mem[j]
            if r == prev:
                continue
            prev = r
            for side in range(2):
                idx = (m * v + r) * 2 + side
                win[idx] = 1
                tim[idx] = 0
                queue[qh] = idx
                qh += 1

    qt = 0
    while qt < qh:
        idx = queue[qt]
        qt += 1
        t = tim[idx]
        side = idx & 1
        rest = idx >> 1
        r = rest % v
        m = rest // v
        if side == 1:
            # robber-to-move just became cop-win: relax cop-to-move predecessors
            for p in range(move_indptr[m], move_indptr[m + 1]):
                pidx = (move_idx[p] * v + r) * 2
                if win[pidx] == 0:
                    win[pidx] = 1
                    tim[pidx] = t + 1
                    queue[qh] = pidx
                    qh += 1
        else:
            # cop-to-move just became cop-win: one robber escape route closed
            for p in range(closed_indptr[r], closed_indptr[r + 1]):
                rp = closed_idx[p]
                pidx = (m * v + rp) * 2 + 1
                if win[pidx] == 0:
                    cpos = m * v + rp
                    counter[cpos] -= 1
                    if counter[cpos] == 0:
                        win[pidx] = 1
                        tim[pidx] = t + 1
                        queue[qh] = pidx
                        qh += 1
    return win, tim


@njit(cache=True)
def _winning_placements(win, v, m_count, limit):
    """Placements S with every (S, r, cops-to-move) cop-win; count + sample."""
    out = np.empty(limit, dtype=np.int64)
    total = 0
    stored = 0
    for m in range(m_count):
        ok = True
        base = m * v * 2
        for r in range(v):
            if win[base + 2 * r] == 0:
                ok = False
                break
        if ok:
            total += 1
            if stored < limit:
                out[stored] = m
                stored += 1
    return out[:stored], total


@dataclass
class SolveResult:
    """Exact game value tables for a fixed cop count on one graph."""

    graph: Graph
    cop_count: int
    cops_win_overall: bool
    winning_initial_placements: list[tuple[int, ...]]
    winning_placement_count: int
    win: np.ndarray  # uint8 per state index
    capture_time_plies: np.ndarray  # int32 per state; -1 on robber-win states
    states: int
    solve_ms: float
    _binom: np.ndarray = field(repr=False, default=None)

    def state_index(self, cops, robber: int, side: int) -> int:
        rank = indexing.rank_of(self._binom, cops)
        return indexing.state_index(self.graph.vertex_count, rank, robber, side)

    def is_cop_win(self, cops, robber: int, side: int) -> bool:
        return bool(self.win[self.state_index(cops, robber, side)])

    def capture_time(self, cops, robber: int, side: int, unit: str = "plies") -> int:
        """Optimal capture time; plies internally, cop turns on request."""
        t = int(self.capture_time_plies[self.state_index(cops, robber, side)])
        if t < 0:
            raise ValueError("capture time undefined on a robber-win state")
        if unit == "plies":
            return t
        if unit == "cop-turns":
            return (t + 1) // 2 if side == COPS_TO_MOVE else t // 2
        raise ValueError(f"unknown unit {unit!r}")


def estimate_state_space(g: Graph, cop_count: int) -> tuple[int, int]:
    """(state count, rough byte estimate) for the dense tables."""
    v = g.vertex_count
    m_count = indexing.num_multisets(v, cop_count)
    states = m_count * v * 2
    max_branch = (max((g.degree(u) for u in range(v)), default=0) + 1) ** cop_count
    est = (
        states * (1 + 4 + 8)  # win + time + queue
        + m_count * v * 4  # counters
        + m_count * max_branch * 8  # move graph upper bound
    )
    return states, est


def cops_win(
    g: Graph,
    cop_count: int,
    *,
    max_cop_count: int = DEFAULT_MAX_COPS,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
    placement_limit: int = 128,
) -> SolveResult:
    """Exact game value for the given cop count under optimal play."""
    if g.vertex_count < 1:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise GraphNotConnectedError("solver requires a connected graph")
    if not (1 <= cop_count <= max_cop_count):
        raise ValueError(f"cop_count must be in 1..{max_cop_count}, got {cop_count}")

    v = g.vertex_count
    c = cop_count
    m_count = indexing.num_multisets(v, c)
    states, est = estimate_state_space(g, c)
    if est > memory_budget:
        raise MemoryBudgetError(states, est, memory_budget)

    t0 = _time.perf_counter()
    binom = indexing.binomial_table(v + c, c + 1)
    closed_indptr, closed_idx = closed_neighborhood_csr(g)
    max_branch = (max(g.degree(u) for u in range(v)) + 1) ** c
    buf = np.empty(max_branch, dtype=np.int64)

    counts = _count_move_rows(closed_indptr, closed_idx, binom, v, c, m_count, buf)
    move_indptr = np.zeros(m_count + 1, dtype=np.int64)
    np.cumsum(counts, out=move_indptr[1:])
    move_idx = np.empty(int(move_indptr[-1]), dtype=np.int64)
    _fill_move_rows(closed_indptr, closed_idx, binom, v, c, m_count, move_indptr, move_idx, buf)

    win, tim = _attractor(move_indptr, move_idx, closed_indptr, closed_idx, binom, v, c, m_count)
    ranks, total = _winning_placements(win, v, m_count, placement_limit)
    placements = [indexing.unrank_to_tuple(binom, int(r), c) for r in ranks]
    ms = (_time.perf_counter() - t0) * 1000.0

    return SolveResult(
        graph=g,
        cop_count=c,
        cops_win_overall=total > 0,
        winning_initial_placements=placements,
        winning_placement_count=total,
        win=win,
        capture_time_plies=tim,
        states=states,
        solve_ms=ms,
        _binom=binom,
    )


def cop_number(
    g: Graph,
    max_cops: int = DEFAULT_MAX_COPS,
    *,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
) -> int | None:
    """Least k <= max_cops with cops_win(g, k); None when it exceeds max_cops."""
    for k in range(1, max_cops + 1):
        if cops_win(g, k, max_cop_count=max_cops, memory_budget=memory_budget).cops_win_overall:
            return k
    return None


def cop_move_multisets(g: Graph, cops) -> list[tuple[int, ...]]:
    """All canonical successor cop multisets (each cop stays or steps)."""
    options = [(c, *g.adjacency[c]) for c in cops]
    return sorted({tuple(sorted(combo)) for combo in itertools.product(*options)})


def _match_destinations(g: Graph, cops: tuple[int, ...], dest: tuple[int, ...]) -> tuple[int, ...]:
    """Assign each cop a destination realizing the target multiset."""
    c = len(cops)
    remaining = list(dest)
    out = [-1] * c

    def extend(i: int) -> bool:
        if i == c:
            return True
        seen = set()
        for j, d in enumerate(remaining):
            if d is None or d in seen:
                continue
            seen.add(d)
            if d == cops[i] or g.has_edge(cops[i], d):
                remaining[j] = None
                out[i] = d
                if extend(i + 1):
                    return True
                remaining[j] = d
        return False

    if not extend(0):
        raise ValueError(f"multiset {dest} not reachable from cops {cops}")
    return tuple(out)


def optimal_cop_move(result: SolveResult, cops, robber: int) -> tuple[int, ...]:
    """Per-cop destinations minimizing capture time from a cop-win state.

    Ties break toward the lexicographically smallest destination multiset.
    """
    cops = tuple(sorted(cops))
    if not result.is_cop_win(cops, robber, COPS_TO_MOVE):
        raise ValueError("optimal_cop_move called on a robber-win state")
    g = result.graph
    best_time = None
    best_dest = None
    for dest in cop_move_multisets(g, cops):
        t = int(result.capture_time_plies[result.state_index(dest, robber, ROBBER_TO_MOVE)])
        if t < 0:
            continue
        if best_time is None or t < best_time or (t == best_time and dest < best_dest):
            best_time = t
            best_dest = dest
    assert best_dest is not None  # a cop-win state has a winning successor
    return _match_destinations(g, cops, best_dest)


NAIVE_ORACLE_VERTEX_CAP = 12
NAIVE_ORACLE_COP_CAP = 2


def naive_minimax_oracle(g: Graph, cop_count: int) -> bool:
    """Independent small-scale oracle for cops_win's overall answer.

    Bottom-up minimax sweeps: a state scores cop-win once capture is forced
    within the sweep horizon; anything that never resolves (i.e. play that
    revisits states forever) counts as a robber win.  Deliberately written
    against dict-of-state tables with no shared code with the attractor.
    """
    if g.vertex_count > NAIVE_ORACLE_VERTEX_CAP:
        raise ValueError(f"oracle capped at {NAIVE_ORACLE_VERTEX_CAP} vertices")
    if cop_count > NAIVE_ORACLE_COP_CAP:
        raise ValueError(f"oracle capped at {NAIVE_ORACLE_COP_CAP} cops")
    if not g.is_connected():
        raise GraphNotConnectedError("oracle requires a connected graph")

    v = g.vertex_count
    placements = list(itertools.combinations_with_replacement(range(v), cop_count))
    cop_win: dict[tuple, bool] = {}
    states = [
        (cops, r, side)
        for cops in placements
        for r in range(v)
        for side in (COPS_TO_MOVE, ROBBER_TO_MOVE)
    ]
    for s in states:
        cop_win[s] = s[1] in s[0]

    changed = True
    while changed:
        changed = False
        for cops, r, side in states:
            if cop_win[(cops, r, side)] or r in cops:
                continue
            if side == COPS_TO_MOVE:
                value = any(
                    cop_win[(dest, r, ROBBER_TO_MOVE)] for dest in cop_move_multisets(g, cops)
                )
            else:
                value = all(
                    cop_win[(cops, rp, COPS_TO_MOVE)] for rp in (r, *g.adjacency[r])
                )
            if value:
                cop_win[(cops, r, side)] = True
                changed = True

    return any(
        all(cop_win[(cops, r, COPS_TO_MOVE)] for r in range(v)) for cops in placements
    )
