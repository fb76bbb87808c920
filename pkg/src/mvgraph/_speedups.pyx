# cython: boundscheck=False, wraparound=False, initializedcheck=False, language_level=3
"""Compiled BFS kernels; semantics identical to mvgraph._pykernels."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF UNREACHABLE = -1


def all_pairs_bfs(cnp.int32_t[::1] indptr, cnp.int32_t[::1] indices, int n):
    arr = np.full((n, n), UNREACHABLE, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] dist = arr
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef int s, head, tail, u, v, j
    cdef cnp.int32_t du
    for s in range(n):
        dist[s, s] = 0
        head = 0
        tail = 0
        queue[tail] = s
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u] + 1
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if dist[s, v] < 0:
                    dist[s, v] = du
                    queue[tail] = v
                    tail += 1
    return arr


def violation_pairs(const cnp.int32_t[::1] indptr, const cnp.int32_t[::1] indices,
                    const cnp.int32_t[:, ::1] dist, members, int limit=0):
    cdef int n = indptr.shape[0] - 1
    members_arr = np.ascontiguousarray(members, dtype=np.int32)
    cdef cnp.int32_t[::1] mem = members_arr
    cdef int k = mem.shape[0]
    in_set_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] in_set = in_set_arr
    rdist_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] rdist = rdist_arr
    queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[::1] queue = queue_arr
    cdef int i, jj, u, v, x, y, j, head, tail
    cdef cnp.int32_t dx, dt
    cdef list out = []
    for i in range(k):
        in_set[mem[i]] = 1
    for i in range(k):
        u = mem[i]
        for x in range(n):
            rdist[x] = UNREACHABLE
        rdist[u] = 0
        head = 0
        tail = 0
        queue[tail] = u
        tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            dx = rdist[x] + 1
            for j in range(indptr[x], indptr[x + 1]):
                y = indices[j]
                if rdist[y] < 0:
                    rdist[y] = dx
                    if not in_set[y]:
                        queue[tail] = y
                        tail += 1
        for jj in range(i + 1, k):
            v = mem[jj]
            dt = dist[u, v]
            if dt < 0 or rdist[v] != dt:
                out.append((u, v))
                if limit and len(out) >= limit:
                    return np.array(out, dtype=np.int32).reshape(-1, 2)
    return np.array(out, dtype=np.int32).reshape(-1, 2)
