"""Immutable undirected simple graphs plus the metrics the game analysis needs.

Vertices are dense 0-based integers.  Everything here is read-only after
construction, so a Graph can be shared freely across threads and worker
processes.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf
UNREACHABLE = -1


class GraphFormatError(ValueError):
    """Malformed text input for parse_graph_file."""


class Graph:
    """Undirected simple graph in adjacency-list form.

    Invariants (enforced by from_edge_list): neighbor lists are sorted,
    symmetric, contain no self-loops and no duplicates, and every index is
    below vertex_count.
    """

    __slots__ = ("vertex_count", "adjacency", "_adj_sets")

    def __init__(self, vertex_count: int, adjacency: tuple[tuple[int, ...], ...]):
        self.vertex_count = vertex_count
        self.adjacency = adjacency
        self._adj_sets = tuple(frozenset(nbrs) for nbrs in adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once, smaller endpoint first."""
        for u in range(self.vertex_count):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def is_regular(self, d: int) -> bool:
        return all(len(nbrs) == d for nbrs in self.adjacency)

    def min_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return min(len(nbrs) for nbrs in self.adjacency)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        dist = bfs_distances(self, 0)
        return UNREACHABLE not in dist

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on n vertices; duplicate edges collapse silently.

    Raises ValueError on self-loops or out-of-range endpoints.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; unreachable vertices get UNREACHABLE (-1)."""
    if not (0 <= source < g.vertex_count):
        raise ValueError(f"source {source} out of range")
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return dist


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; INFINITE for forests.

    BFS from every vertex with cross-edge detection.  A BFS rooted on a
    shortest cycle sees that cycle at its true length, so the minimum over
    all roots is exact.  Roots are cut off once they can no longer beat the
    best cycle found so far.
    """
    best = INFINITE
    dist = [0] * g.vertex_count
    parent = [0] * g.vertex_count
    for src in range(g.vertex_count):
        for v in range(g.vertex_count):
            dist[v] = UNREACHABLE
        dist[src] = 0
        parent[src] = -1
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du + 1 >= best:
                continue  # any cycle through u from here on is >= best
            for v in g.adjacency[u]:
                if dist[v] == UNREACHABLE:
                    dist[v] = du + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cycle_len = du + dist[v] + 1
                    if cycle_len < best:
                        best = cycle_len
    return best


def has_pitfall(g: Graph) -> bool:
    """True iff some vertex u has a neighbor w with N[u] contained in N[w].

    Closed neighborhoods: w dominates u, so a cop on w corners a robber on u.
    """
    for u in range(g.vertex_count):
        closed_u = g._adj_sets[u] | {u}
        for w in g.adjacency[u]:
            if closed_u <= (g._adj_sets[w] | {w}):
                return True
    return False


def dismantlable(g: Graph) -> bool:
    """True iff iterated pitfall removal reduces the graph to one vertex.

    Pitfalls are recomputed after every removal.  This is the independent
    one-cop oracle: a connected graph is one-cop-win exactly when it
    dismantles.
    """
    if g.vertex_count == 0:
        return False
    alive = set(range(g.vertex_count))
    nbrs = [set(a) for a in g.adjacency]
    while len(alive) > 1:
        victim = -1
        for u in alive:
            closed_u = nbrs[u] | {u}
            for w in nbrs[u]:
                if closed_u <= (nbrs[w] | {w}):
                    victim = u
                    break
            if victim >= 0:
                break
        if victim < 0:
            return False
        alive.discard(victim)
        for w in nbrs[victim]:
            nbrs[w].discard(victim)
        nbrs[victim] = set()
    return True


def parse_graph_file(text: str) -> Graph:
    """Parse the plain-text graph format.

    Format: header line ``p <V> <E>``, then E lines ``<u> <v>`` with 0-based
    indices.  Lines starting with ``#`` and blank lines are ignored anywhere.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphFormatError("empty graph file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "p":
        raise GraphFormatError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise GraphFormatError(f"non-integer header fields: {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"negative counts in header: {lines[0]!r}")
    edge_lines = lines[1:]
    if len(edge_lines) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edge_lines)}")
    edges = []
    for line in edge_lines:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer edge line: {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u},{v}) overflows vertex count {n}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        edges.append((u, v))
    return from_edge_list(n, edges)


def format_graph_file(g: Graph) -> str:
    """Serialize to the parse_graph_file format (round-trip identity)."""
    lines = [f"p {g.vertex_count} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def render_dot(g: Graph) -> str:
    """Undirected DOT export; each edge emitted once, smaller index first."""
    lines = ["graph {"]
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def subgraph_ball(g: Graph, center: int, radius: int) -> list[int]:
    """Vertices within the given hop radius of center (center included)."""
    dist = bfs_distances(g, center)
    return [v for v, d in enumerate(dist) if d != UNREACHABLE and d <= radius]


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
