"""Immutable undirected simple graph plus the all-pairs distance machinery."""

from __future__ import annotations

from collections import deque

import numpy as np

from . import kernels
from .errors import DisconnectedGraphError, GraphError

UNREACHABLE = kernels.UNREACHABLE


class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Adjacency lists are sorted and symmetric; the instance is immutable
    after construction and safe to share between workers.  A CSR view
    (`indptr`/`indices`, int32) is kept for the BFS kernels, and the
    all-pairs distance matrix is computed lazily and cached.
    """

    __slots__ = ("n", "m", "adjacency", "indptr", "indices", "_dist")

    def __init__(self, n: int, adjacency: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adjacency = adjacency
        self.m = sum(len(a) for a in adjacency) // 2
        indptr = np.zeros(n + 1, dtype=np.int32)
        for v in range(n):
            indptr[v + 1] = indptr[v] + len(adjacency[v])
        self.indptr = indptr
        self.indices = np.fromiter(
            (w for a in adjacency for w in a), dtype=np.int32, count=int(indptr[n])
        )
        self._dist = None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self):
        """Edges as (u, v) with u < v, ascending lexicographic."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self):
        return hash((self.n, self.adjacency))


class DistanceMatrix:
    """All-pairs hop distances; UNREACHABLE (-1) marks disconnected pairs."""

    __slots__ = ("n", "dist")

    def __init__(self, n: int, dist: np.ndarray):
        self.n = n
        self.dist = dist
        dist.setflags(write=False)

    def __getitem__(self, pair):
        u, v = pair
        return int(self.dist[u, v])


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph from unordered id pairs; duplicates collapse, self-loops reject."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has id out of range [0, {n})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) not allowed")
        seen.add((u, v) if u < v else (v, u))
    adj = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS-exact hop distances between all pairs (cached on the graph)."""
    if g._dist is None:
        g._dist = DistanceMatrix(g.n, kernels.all_pairs_bfs(g.indptr, g.indices, g.n))
    return g._dist


def is_connected(g: Graph) -> bool:
    """True iff one BFS from vertex 0 reaches everything; n <= 1 counts as connected."""
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    q = deque([0])
    reached = 1
    while q:
        u = q.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                reached += 1
                q.append(v)
    return reached == g.n


def average_distance(g: Graph) -> float:
    """Mean distance over unordered vertex pairs: 2/(n(n-1)) * sum d(u,v)."""
    if g.n < 2:
        raise GraphError("average distance needs at least 2 vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("average distance undefined on disconnected graphs")
    d = all_pairs_distances(g).dist
    # the matrix is symmetric, so the ordered sum already carries the factor 2
    return float(d.sum()) / (g.n * (g.n - 1))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(a) for a in g.adjacency)


def leaves(g: Graph) -> set[int]:
    """Vertices of degree exactly 1."""
    return {v for v in range(g.n) if len(g.adjacency[v]) == 1}
