"""Cycle-structure detection: paired 8-cycles, coincidence algebra, scans.

Three cops can force the endgame only from configurations built on two
8-cycles through the robber whose intersection is a path of two edges; a
cubic girth-8 graph without such a pair of cycles defeats three cops.  This
module finds the pairs concretely, reproduces the symbolic coincidence
analysis on the distance-4 label trees of GP(n,k), and scans game states to
verify the structural characterization of 2-trapped positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np
from numba import njit

from . import gp
from .graph import Graph, bfs_distances, girth
from .indexing import multiset_unrank

Label = tuple[str, int, int]  # (ring, alpha, beta): vertex a/b_{i + alpha + beta*k}


# ---------------------------------------------------------------------------
# Cycle enumeration


def cycles_of_length_through(g: Graph, v: int, length: int) -> list[tuple[int, ...]]:
    """All simple cycles of exactly the given length containing v.

    Each cycle is reported once, in canonical form: rotated to start at its
    minimum vertex, in the lexicographically smaller direction.  DFS from v
    with a BFS-distance pruning bound.
    """
    if not (3 <= length <= 12):
        raise ValueError(f"cycle length must be in 3..12, got {length}")
    dist = bfs_distances(g, v)
    found: set[tuple[int, ...]] = set()
    path = [v]
    on_path = [False] * g.vertex_count
    on_path[v] = True

    def dfs():
        u = path[-1]
        steps_left = length - len(path)
        if steps_left == 0:
            if g.has_edge(u, v):
                found.add(canonical_cycle(path))
            return
        for w in g.adjacency[u]:
            if on_path[w]:
                continue
            d = dist[w]
            if d < 0 or d > steps_left:
                continue
            on_path[w] = True
            path.append(w)
            dfs()
            path.pop()
            on_path[w] = False

    dfs()
    return sorted(found)


def canonical_cycle(cycle) -> tuple[int, ...]:
    """Rotate to the minimum vertex; pick the lex smaller direction."""
    cyc = list(cycle)
    i = cyc.index(min(cyc))
    fwd = tuple(cyc[i:] + cyc[:i])
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, rev)


def _cycle_edges(cycle: tuple[int, ...]) -> frozenset[frozenset[int]]:
    n = len(cycle)
    return frozenset(frozenset((cycle[i], cycle[(i + 1) % n])) for i in range(n))


def all_cycles_of_length(g: Graph, length: int) -> list[tuple[int, ...]]:
    """Every simple cycle of the given length, once each."""
    seen: set[tuple[int, ...]] = set()
    for v in range(g.vertex_count):
        for cyc in cycles_of_length_through(g, v, length):
            seen.add(cyc)
    return sorted(seen)


# ---------------------------------------------------------------------------
# Paired 8-cycles meeting in a 2-edge path


@dataclass(frozen=True)
class CyclePair:
    """Two 8-cycles whose intersection is exactly a 2-edge path."""

    cycle_a: tuple[int, ...]
    cycle_b: tuple[int, ...]
    center: int
    shared_path: tuple[int, int, int]


def _shared_two_edge_path(ca, cb) -> tuple[int, int, int] | None:
    """The 2-edge path shared by two cycles, or None.

    Requires the edge intersection to be exactly two adjacent edges and the
    vertex intersection to be exactly their three vertices.
    """
    shared_edges = _cycle_edges(ca) & _cycle_edges(cb)
    if len(shared_edges) != 2:
        return None
    e1, e2 = shared_edges
    mid = e1 & e2
    if len(mid) != 1:
        return None
    if len(set(ca) & set(cb)) != 3:
        return None
    (center,) = mid
    (x,) = e1 - mid
    (y,) = e2 - mid
    return (min(x, y), center, max(x, y))


def two_trap_pairs(g: Graph) -> list[CyclePair]:
    """All pairs of 8-cycles intersecting in a path of two edges."""
    cycles = all_cycles_of_length(g, 8)
    pairs = []
    for ca, cb in itertools.combinations(cycles, 2):
        shared = _shared_two_edge_path(ca, cb)
        if shared is not None:
            pairs.append(
                CyclePair(cycle_a=ca, cycle_b=cb, center=shared[1], shared_path=shared)
            )
    return pairs


def admits_two_trap(g: Graph) -> bool:
    return bool(two_trap_pairs(g))


def validate_cycle_pair(g: Graph, pair: CyclePair) -> None:
    """Independent re-check of a CyclePair against raw edge sets."""
    for cyc in (pair.cycle_a, pair.cycle_b):
        if len(cyc) != 8 or len(set(cyc)) != 8:
            raise AssertionError(f"not a simple 8-cycle: {cyc}")
        for i in range(8):
            if not g.has_edge(cyc[i], cyc[(i + 1) % 8]):
                raise AssertionError(f"missing edge in cycle: {cyc}")
    x, center, y = pair.shared_path
    if center != pair.center:
        raise AssertionError("center mismatch")
    want_edges = {frozenset((x, center)), frozenset((center, y))}
    if _cycle_edges(pair.cycle_a) & _cycle_edges(pair.cycle_b) != want_edges:
        raise AssertionError("edge intersection is not the shared path")
    if set(pair.cycle_a) & set(pair.cycle_b) != {x, center, y}:
        raise AssertionError("vertex intersection is not the shared path")


# ---------------------------------------------------------------------------
# Symbolic distance-4 label trees and coincidence relations


def _label_neighbors(label: Label) -> list[Label]:
    ring, alpha, beta = label
    if ring == "A":
        return [("A", alpha + 1, beta), ("A", alpha - 1, beta), ("B", alpha, beta)]
    return [("B", alpha, beta + 1), ("B", alpha, beta - 1), ("A", alpha, beta)]


@lru_cache(maxsize=None)
def tree_paths(side: str) -> tuple[tuple[Label, ...], ...]:
    """Root-to-leaf paths of the generic distance-4 tree from an A or B vertex.

    Labels are symbolic offsets (ring, alpha, beta); for generic (n,k) all 24
    paths are distinct except the four built-in leaf identifications.
    """
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    root: Label = (side, 0, 0)
    paths = [(root,)]
    for _ in range(4):
        nxt = []
        for p in paths:
            parent = p[-2] if len(p) >= 2 else None
            for nb in _label_neighbors(p[-1]):
                if nb != parent:
                    nxt.append(p + (nb,))
        paths = nxt
    assert len(paths) == 24
    return tuple(paths)


def format_label(label: Label) -> str:
    ring, alpha, beta = label
    parts = []
    if beta:
        parts.append(f"{beta:+d}k" if abs(beta) != 1 else ("+k" if beta > 0 else "-k"))
    if alpha:
        parts.append(f"{alpha:+d}")
    suffix = "".join(parts)
    return f"{ring.lower()}[i{suffix}]"


@dataclass(frozen=True)
class CoincidenceRelation:
    """Linear identity m*n = b*k + c forcing two distance-4 labels to meet.

    m = 0 encodes constant-k relations (b*k + c = 0); b = 0 encodes
    constant-n relations (n divides c).
    """

    side: str
    n_coeff: int
    k_coeff: int
    const: int
    pairs: tuple[tuple[Label, Label], ...]

    def satisfied_by(self, n: int, k: int) -> bool:
        return self.n_coeff * n == self.k_coeff * k + self.const

    def format(self) -> str:
        m, b, c = self.n_coeff, self.k_coeff, self.const
        if m == 0:
            return f"k={-c // b}" if b else "0=0"
        if b == 0:
            return f"n={c // m}"
        if m == 1 and b == 1 and c > 0:
            return f"k=n-{c}"
        lhs = "n" if m == 1 else f"{m}n"
        rhs = f"{b}k" if b != 1 else "k"
        if c:
            rhs += f"{c:+d}"
        return f"{lhs}={rhs}"


def _family_has_solution(m: int, b: int, c: int, n_probe: int = 200) -> bool:
    """Does m*n = b*k + c admit any valid GP parameters?

    Probing n up to a bound is exact: solutions in k grow linearly with n,
    so a family with any solution has one with small n.
    """
    for n in range(5, n_probe + 1):
        num = m * n - c
        if b > 0 and num % b == 0:
            k = num // b
            if 1 <= k and 2 * k < n:
                return True
    return False


@lru_cache(maxsize=None)
def candidate_relations(side: str) -> tuple[CoincidenceRelation, ...]:
    """All relations under which two distinct same-ring distance-4 labels
    coincide mod n, derived symbolically from the label tree.

    A/B cross-pairs are excluded (outer and inner vertices can never meet);
    identically-labeled leaves are the built-in identifications and generate
    no relation.  The congruence db*k + dc = 0 (mod n) splits into integer
    identities m*n = db*k + dc; with |dc| <= 5 whenever db >= 1 the value
    db*k + dc stays above -n, so m >= 0 always.
    """
    leaves = [p[-1] for p in tree_paths(side)]
    by_key: dict[tuple[int, int, int], list[tuple[Label, Label]]] = {}
    for la, lb in itertools.combinations(sorted(set(leaves)), 2):
        if la[0] != lb[0]:
            continue
        dc = la[1] - lb[1]
        db = la[2] - lb[2]
        if db == 0 and dc == 0:
            continue
        if db < 0 or (db == 0 and dc < 0):
            db, dc = -db, -dc
        if db == 0:
            for n_val in range(5, dc + 1):
                if dc % n_val == 0:
                    by_key.setdefault((1, 0, n_val), []).append((la, lb))
            continue
        # m = 0: constant-k solution db*k = -dc
        if dc < 0 and (-dc) % db == 0 and (-dc) // db >= 1:
            by_key.setdefault((0, 1, -((-dc) // db)), []).append((la, lb))
        # m >= 1: linear families, reduced by the gcd; k < n/2 bounds m
        for m in range(1, db // 2 + 2):
            if _family_has_solution(m, db, dc):
                g_ = gcd(m, gcd(db, abs(dc)))
                by_key.setdefault((m // g_, db // g_, dc // g_), []).append((la, lb))
    return tuple(
        CoincidenceRelation(side=side, n_coeff=m, k_coeff=b, const=c, pairs=tuple(pairs))
        for (m, b, c), pairs in sorted(by_key.items())
    )


def distance4_coincidences(n: int, k: int, side: str) -> list[CoincidenceRelation]:
    """Relations from the candidate list satisfied by this (n,k)."""
    gp.GpParams(n, k)
    return [r for r in candidate_relations(side) if r.satisfied_by(n, k)]


def instantiate_label(label: Label, n: int, k: int, i: int) -> int:
    ring, alpha, beta = label
    idx = (i + alpha + beta * k) % n
    return idx if ring == "A" else n + idx


def baseline_cycles(n: int, k: int, side: str, i: int) -> list[tuple[int, ...]]:
    """The four 8-cycles through a_i (side A) or b_i (side B) built from the
    tree's identified leaves, in canonical cycle form."""
    paths = tree_paths(side)
    by_leaf: dict[Label, list[tuple[Label, ...]]] = {}
    for p in paths:
        by_leaf.setdefault(p[-1], []).append(p)
    cycles = []
    for leaf, ps in by_leaf.items():
        if len(ps) == 2:
            p1, p2 = ps
            walk = list(p1) + list(reversed(p2[1:-1]))
            cycles.append(
                canonical_cycle([instantiate_label(x, n, k, i) for x in walk])
            )
    assert len(cycles) == 4
    return sorted(cycles)


# ---------------------------------------------------------------------------
# Exhaustive 2-trapped scans (cubic graphs, 3 cops)


@njit(cache=True)
def _trapped_mask_kernel(adj, adjmat, binom, v, m_count):
    """Trapped flag per (cop-multiset rank, robber) for 3 cops on a cubic graph."""
    out = np.zeros(m_count * v, dtype=np.uint8)
    mem = np.empty(3, dtype=np.int64)
    for m in range(m_count):
        multiset_unrank(binom, m, 3, mem)
        c1, c2, c3 = mem[0], mem[1], mem[2]
        for r in range(v):
            if r == c1 or r == c2 or r == c3:
                continue  # captured, predicate undefined
            ok = True
            for e in range(3):
                w = adj[r, e]
                if w == c1 or w == c2 or w == c3:
                    continue
                if adjmat[w, c1] or adjmat[w, c2] or adjmat[w, c3]:
                    continue
                ok = False
                break
            if ok:
                out[m * v + r] = 1
    return out


@njit(cache=True)
def _scan_two_trapped_ball(adj, adjmat, r, ball, out_cops, cap):
    """2-trapped-but-not-trapped cop triples for one robber vertex.

    Cops range over the distance-4 ball (exhaustive for 3 cops on cubic
    girth >= 5: trapping needs three distinct cops within 2 of the robber's
    next vertex).  Returns the number found; rows beyond cap are counted but
    not stored.
    """
    found = 0
    nb = ball.shape[0]
    for i in range(nb):
        c1 = ball[i]
        for j in range(i, nb):
            c2 = ball[j]
            for l in range(j, nb):
                c3 = ball[l]
                # trapped pre-check
                is_trapped = True
                for e in range(3):
                    w = adj[r, e]
                    if w == c1 or w == c2 or w == c3:
                        continue
                    if adjmat[w, c1] or adjmat[w, c2] or adjmat[w, c3]:
                        continue
                    is_trapped = False
                    break
                if is_trapped:
                    continue
                ok_all = True
                for e in range(3):
                    u = adj[r, e]
                    if u == c1 or u == c2 or u == c3:
                        continue  # robber walks into a cop
                    success = False
                    for d1 in range(4):
                        n1 = c1 if d1 == 3 else adj[c1, d1]
                        for d2 in range(4):
                            n2 = c2 if d2 == 3 else adj[c2, d2]
                            for d3 in range(4):
                                n3 = c3 if d3 == 3 else adj[c3, d3]
                                if n1 == u or n2 == u or n3 == u:
                                    success = True
                                    break
                                trap = True
                                for f in range(3):
                                    w = adj[u, f]
                                    if w == n1 or w == n2 or w == n3:
                                        continue
                                    if adjmat[w, n1] or adjmat[w, n2] or adjmat[w, n3]:
                                        continue
                                    trap = False
                                    break
                                if trap:
                                    success = True
                                    break
                            if success:
                                break
                        if success:
                            break
                    if not success:
                        ok_all = False
                        break
                if ok_all:
                    if found < cap:
                        out_cops[found, 0] = c1
                        out_cops[found, 1] = c2
                        out_cops[found, 2] = c3
                    found += 1
    return found


def _cubic_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    if not g.is_regular(3):
        raise ValueError("scan requires a cubic graph")
    adj = np.array(g.adjacency, dtype=np.int64)
    adjmat = np.zeros((g.vertex_count, g.vertex_count), dtype=np.uint8)
    for u, w in g.edges():
        adjmat[u, w] = 1
        adjmat[w, u] = 1
    return adj, adjmat


def trapped_state_mask(g: Graph) -> np.ndarray:
    """uint8 mask over (3-cop multiset rank, robber): robber is trapped."""
    from . import indexing

    adj, adjmat = _cubic_arrays(g)
    v = g.vertex_count
    m_count = indexing.num_multisets(v, 3)
    binom = indexing.binomial_table(v + 3, 4)
    return _trapped_mask_kernel(adj, adjmat, binom, v, m_count)


def two_trapped_states(g: Graph, min_girth: int = 5) -> list[tuple[int, tuple[int, int, int]]]:
    """All (robber, cops) with 3 cops 2-trapping but not trapping the robber.

    Exhaustive for cubic graphs of girth >= 5 and exact-girth reasoning:
    cops beyond distance 4 cannot participate, so the distance-4 ball scan
    misses nothing.
    """
    adj, adjmat = _cubic_arrays(g)
    if girth(g) < min_girth:
        raise ValueError(f"scan requires girth >= {min_girth}")
    out = []
    for r in range(g.vertex_count):
        dist = bfs_distances(g, r)
        ball = np.array(
            [u for u, d in enumerate(dist) if 1 <= d <= 4], dtype=np.int64
        )
        cap = 4096
        while True:
            buf = np.empty((cap, 3), dtype=np.int64)
            found = _scan_two_trapped_ball(adj, adjmat, r, ball, buf, cap)
            if found <= cap:
                break
            cap = found
        for t in range(found):
            out.append((r, (int(buf[t, 0]), int(buf[t, 1]), int(buf[t, 2]))))
    return out


def _cycle_index_distance(cycle: tuple[int, ...], a: int, b: int) -> int:
    ia, ib = cycle.index(a), cycle.index(b)
    d = abs(ia - ib)
    return min(d, len(cycle) - d)


def _conforms_to_shape(g: Graph, robber: int, cops: tuple[int, int, int]) -> bool:
    """Check the structural shape of a 2-trapped-not-trapped state:

    two cops antipodal to the robber on 8-cycles meeting exactly in two of
    the robber's edges, third cop at distance 1 or 2 along the third edge.
    """
    cycles = cycles_of_length_through(g, robber, 8)
    nbrs = g.adjacency[robber]
    for far_a, far_b, near in itertools.permutations(cops):
        for ca in cycles:
            if far_a not in ca or _cycle_index_distance(ca, robber, far_a) != 4:
                continue
            for cb in cycles:
                if cb == ca:
                    continue
                if far_b not in cb or _cycle_index_distance(cb, robber, far_b) != 4:
                    continue
                shared = _shared_two_edge_path(ca, cb)
                if shared is None or shared[1] != robber:
                    continue
                va, _, vb = shared
                if va not in nbrs or vb not in nbrs:
                    continue
                third = [w for w in nbrs if w not in (va, vb)]
                if len(third) != 1:
                    continue
                vc = third[0]
                if near == vc or (near != robber and g.has_edge(vc, near)):
                    return True
    return False


@dataclass
class ConformanceReport:
    """Scan result: 2-trapped-not-trapped states and shape conformance."""

    graph_vertices: int
    states: list[tuple[int, tuple[int, int, int]]]
    conforming: list[tuple[int, tuple[int, int, int]]]
    violations: list[tuple[int, tuple[int, int, int]]]

    @property
    def clean(self) -> bool:
        return not self.violations


def two_trapped_conformance(
    g: Graph, cop_count: int = 3, *, require_girth8: bool = True
) -> ConformanceReport:
    """Scan all robber-to-move 3-cop states; classify the 2-trapped-not-trapped
    ones against the antipodal-cycle-pair shape.

    The shape characterization is proved for girth >= 8; pass
    require_girth8=False to scan lower-girth cubic graphs (>= 5) anyway and
    see whether the shape still holds empirically.
    """
    if cop_count != 3:
        raise ValueError("conformance scan is defined for exactly 3 cops")
    gir = girth(g)
    if require_girth8 and gir < 8:
        raise ValueError(f"graph has girth {gir} < 8; pass require_girth8=False to force")
    states = two_trapped_states(g)
    conforming, violations = [], []
    for r, cops in states:
        (conforming if _conforms_to_shape(g, r, cops) else violations).append((r, cops))
    return ConformanceReport(
        graph_vertices=g.vertex_count,
        states=states,
        conforming=conforming,
        violations=violations,
    )


# ---------------------------------------------------------------------------
# Family survey


@dataclass(frozen=True)
class SurveyRow:
    n: int
    k: int
    admits: bool
    in_family: bool
    tags: tuple[str, ...]


@dataclass
class SurveyReport:
    rows: list[SurveyRow]
    violations: list[SurveyRow]  # admits but outside every family
    family_counts: dict[str, tuple[int, int]]  # tag -> (instances, admitting)


SURVEY_N_CAP = 60


def survey_two_trap_families(n_max: int, *, n_cap: int = SURVEY_N_CAP) -> SurveyReport:
    """For every girth-8 GP(n,k) at minimum k, compare the concrete paired
    8-cycle detector against the four parameter families that admit it.

    The necessary direction (admits => in a family) must be exact; the
    per-family converse is reported as coverage counts.
    """
    if n_max > n_cap:
        raise ValueError(f"survey capped at n <= {n_cap}")
    rows = []
    fam_counts: dict[str, list[int]] = {t.name: [0, 0] for t in gp.GIRTH8_EXCEPTION_TAGS}
    for n in range(5, n_max + 1):
        for k in range(1, (n - 1) // 2 + 1):
            if gp.min_k(n, k) != k:
                continue
            graph_nk = gp.build_gp(n, k)
            if girth(graph_nk) != 8:
                continue
            tags = tuple(
                t.name for t in gp.GIRTH8_EXCEPTION_TAGS if gp.tag_holds(t, n, k)
            )
            admits = admits_two_trap(graph_nk)
            rows.append(SurveyRow(n=n, k=k, admits=admits, in_family=bool(tags), tags=tags))
            for t in tags:
                fam_counts[t][0] += 1
                if admits:
                    fam_counts[t][1] += 1
    violations = [r for r in rows if r.admits and not r.in_family]
    return SurveyReport(
        rows=rows,
        violations=violations,
        family_counts={t: (a, b) for t, (a, b) in fam_counts.items()},
    )
