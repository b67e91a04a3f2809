"""Compiled breadth-first search kernels over padded adjacency arrays.

``adj`` is an ``(N, max_degree)`` int32 array; row ``u`` lists the neighbours
of vertex ``u`` padded with ``-1``. All kernels release the GIL so callers can
fan sources out over threads; every source writes only its own output slot.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _bfs_into(adj, source, dist, queue):
    n = adj.shape[0]
    for v in range(n):
        dist[v] = -1
    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for k in range(adj.shape[1]):
            v = adj[u, k]
            if v >= 0 and dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return tail


@njit(cache=True, nogil=True)
def single_source(adj, source, dist):
    queue = np.empty(adj.shape[0], np.int32)
    return _bfs_into(adj, source, dist, queue)


@njit(cache=True, nogil=True)
def source_summaries(adj, sources, totals, eccs, reached):
    """Total distance, eccentricity and reached count for each source."""
    n = adj.shape[0]
    dist = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    for si in range(sources.shape[0]):
        count = _bfs_into(adj, sources[si], dist, queue)
        total = 0
        ecc = 0
        for q in range(count):
            d = dist[queue[q]]
            total += d
            if d > ecc:
                ecc = d
        totals[si] = total
        eccs[si] = ecc
        reached[si] = count


@njit(cache=True, nogil=True)
def distance_rows(adj, sources, out):
    queue = np.empty(adj.shape[0], np.int32)
    dist = np.empty(adj.shape[0], np.int32)
    for si in range(sources.shape[0]):
        _bfs_into(adj, sources[si], dist, queue)
        for v in range(adj.shape[0]):
            out[si, v] = dist[v]


@njit(cache=True, nogil=True)
def pair_distances(adj, src, dst, out):
    """Distances for pairs ``(src[q], dst[q])``; ``src`` must be sorted."""
    n = adj.shape[0]
    dist = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    current = -1
    for q in range(src.shape[0]):
        if src[q] != current:
            current = src[q]
            _bfs_into(adj, current, dist, queue)
        out[q] = dist[dst[q]]
