"""Pure-Python BFS kernels.

Fallback implementations of the hot inner loops; the compiled module in
``_speedups.pyx`` mirrors these exactly.  Selection happens in
:mod:`mvgraph.kernels`.
"""

from collections import deque

import numpy as np

UNREACHABLE = -1


def all_pairs_bfs(indptr, indices, n):
    """Hop distances between all vertex pairs of a CSR graph; -1 where unreachable."""
    dist = np.full((n, n), UNREACHABLE, dtype=np.int32)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = row[u] + 1
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if row[v] < 0:
                    row[v] = du
                    q.append(v)
    return dist


def violation_pairs(indptr, indices, dist, members, limit=0):
    """Pairs of `members` that are not mutually visible.

    For each member u a BFS is run that refuses to expand other members, so
    the distance it assigns to a member v is the shortest u-v walk whose
    internal vertices all lie outside the set.  The pair (u, v) is visible
    iff that restricted distance equals the true distance.  Unreachable
    pairs count as violations.

    `limit` > 0 stops the scan after that many violations (early exit for
    yes/no style queries).  Returns an (k, 2) int array with u < v rows.
    """
    n = len(indptr) - 1
    members = np.asarray(members, dtype=np.int32)
    k = len(members)
    in_set = np.zeros(n, dtype=bool)
    in_set[members] = True
    out = []
    rdist = np.empty(n, dtype=np.int32)
    for i in range(k):
        u = int(members[i])
        rdist.fill(UNREACHABLE)
        rdist[u] = 0
        q = deque([u])
        while q:
            x = q.popleft()
            dx = rdist[x] + 1
            for j in range(indptr[x], indptr[x + 1]):
                y = indices[j]
                if rdist[y] < 0:
                    rdist[y] = dx
                    if not in_set[y]:
                        q.append(y)
        for jj in range(i + 1, k):
            v = int(members[jj])
            dt = dist[u, v]
            if dt < 0 or rdist[v] != dt:
                out.append((u, v))
                if limit and len(out) >= limit:
                    return np.array(out, dtype=np.int32).reshape(-1, 2)
    return np.array(out, dtype=np.int32).reshape(-1, 2)
