"""Mutual-visibility checking and the lower bounds reported by the harness."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import GraphError
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    average_distance,
    max_degree,
)


@dataclass(frozen=True)
class ViolationReport:
    """Pairs of the candidate set that fail the visibility test."""

    count: int
    pairs: tuple[tuple[int, int], ...]


def _members_array(g: Graph, members) -> np.ndarray:
    arr = np.array(sorted(members), dtype=np.int32)
    if len(arr) and (arr[0] < 0 or arr[-1] >= g.n):
        bad = int(arr[0] if arr[0] < 0 else arr[-1])
        raise GraphError(f"member id {bad} out of range [0, {g.n})")
    return arr


def x_visible(g: Graph, dist: DistanceMatrix, u: int, v: int, members) -> bool:
    """True iff some shortest u-v path has all internal vertices outside the set.

    Realized as a BFS from u over the graph restricted to non-members (plus
    the endpoints): the pair is visible iff the restricted distance matches
    the true distance.  Unreachable pairs are never visible.
    """
    if u == v:
        raise GraphError("x_visible needs two distinct vertices")
    target = dist[u, v]
    if target < 0:
        return False
    blocked = set(members) - {u, v}
    rdist = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        dx = rdist[x]
        if dx >= target:
            break
        for y in g.adjacency[x]:
            if y in blocked or y in rdist:
                continue
            rdist[y] = dx + 1
            if y == v:
                return dx + 1 == target
            q.append(y)
    return False


def violations(g: Graph, members, limit: int = 0) -> ViolationReport:
    """Visibility check over all unordered pairs of the candidate set.

    The set is a mutual-visibility set iff the returned count is 0.
    `limit` > 0 stops early after that many violations (the report is then
    a prefix, sufficient for yes/no decisions).
    """
    arr = _members_array(g, members)
    if len(arr) <= 1:
        return ViolationReport(0, ())
    dist = all_pairs_distances(g)
    pairs = kernels.violation_pairs(g.indptr, g.indices, dist.dist, arr, limit)
    return ViolationReport(len(pairs), tuple((int(a), int(b)) for a, b in pairs))


def is_mv_set(g: Graph, members) -> bool:
    return violations(g, members, limit=1).count == 0


def degree_lower_bound(g: Graph) -> tuple[int, set[int]]:
    """Max degree and the neighborhood of a max-degree vertex as an MV witness.

    Any two neighbors of v* are adjacent or see each other through v*,
    which is outside the set, so the witness is always an MV set.
    """
    if g.n == 0:
        raise GraphError("degree bound needs at least one vertex")
    best = max(range(g.n), key=lambda v: (len(g.adjacency[v]), -v))
    return len(g.adjacency[best]), set(g.adjacency[best])


def clique_lower_bound(g: Graph) -> int:
    """Size of a greedily grown clique (highest degree first, smallest id on ties).

    Every clique is an MV set, so this is a valid lower bound on mu(G); it
    is not guaranteed to equal the clique number.
    """
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-len(g.adjacency[v]), v))
    clique: list[int] = []
    neighbor_sets = [set(a) for a in g.adjacency]
    for v in order:
        if all(v in neighbor_sets[u] for u in clique):
            clique.append(v)
    return len(clique)


def hypergraph_bound(g: Graph) -> float:
    """sqrt(n / average distance): the greedy approximation's asymptotic floor."""
    return math.sqrt(g.n / average_distance(g))
