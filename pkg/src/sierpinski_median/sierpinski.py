"""Sierpiński graphs ``S^n`` (the Switching Tower of Hanoi state graphs).

The graph is implicit: neighbours are derived from digit patterns of the
vertex word. Each vertex ``s`` has two clique neighbours (change ``s_1``) and,
unless it is extreme (``i^n``), exactly one non-clique partner: for
``s = s̄ i j^r`` with ``i != j`` the partner is ``s̄ j i^r``.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import OrderTooLarge, WrongLength
from .metrics import IndexedGraph, bfs_distances, compute_metrics
from .words import DIGITS, MAX_ORDER, TernaryWord, build_pattern, trailing_run

ENUM_CAP = 12
ALLPAIRS_CAP = 8


class EdgeKind(enum.Enum):
    CLIQUE = "C"
    NONCLIQUE = "N"


def _check_order(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > cap:
        raise OrderTooLarge(f"order {n} exceeds cap {cap}")


def _check_word(n: int, s: TernaryWord) -> None:
    if s.length != n:
        raise WrongLength(f"vertex {s} has length {s.length}, expected {n}")


def vertices(n: int, cap: int = ENUM_CAP) -> Iterator[TernaryWord]:
    """All ``3^n`` words of length ``n`` in lexicographic order."""
    _check_order(n, cap)
    for index in range(3**n):
        yield TernaryWord.from_index(index, n)


def is_extreme(n: int, s: TernaryWord) -> bool:
    _check_word(n, s)
    return n == 0 or trailing_run(s)[1] == n


def nonclique_partner(n: int, s: TernaryWord) -> TernaryWord | None:
    _check_word(n, s)
    if n == 0:
        return None
    j, run = trailing_run(s)
    if run == n:
        return None
    i = s.digit(run + 1)
    return build_pattern(s.prefix(n - run - 1), j, i, run)


def neighbors(n: int, s: TernaryWord) -> list[tuple[TernaryWord, EdgeKind]]:
    """Clique neighbours ordered by last digit, then the non-clique partner if any."""
    _check_word(n, s)
    if n == 0:
        return []
    head = s.prefix(n - 1)
    result = [
        (head + TernaryWord(1, b), EdgeKind.CLIQUE) for b in DIGITS if b != s.digit(1)
    ]
    partner = nonclique_partner(n, s)
    if partner is not None:
        result.append((partner, EdgeKind.NONCLIQUE))
    return result


def edges(n: int, cap: int = ENUM_CAP) -> Iterator[tuple[TernaryWord, TernaryWord, EdgeKind]]:
    """Every edge once, as ``(u, v, kind)`` with ``u < v``."""
    for s in vertices(n, cap):
        for t, kind in neighbors(n, s):
            if s < t:
                yield s, t, kind


def extreme_distance(s: TernaryWord, i: int) -> int:
    """Distance from ``s`` to the extreme vertex ``i^{|s|}``."""
    return sum(1 << (d - 1) for d in range(1, s.length + 1) if s.digit(d) != i)


def extreme_distance_many(n: int, idx: np.ndarray, i: int) -> np.ndarray:
    """Vectorised :func:`extreme_distance` over base-3 indices of length-``n`` words."""
    idx = np.asarray(idx, dtype=np.int64)
    total = np.zeros(idx.shape, dtype=np.int64)
    for p in range(n):
        total += ((idx // 3**p) % 3 != i) * (1 << p)
    return total


def sum_extreme_distances(n: int, s: TernaryWord) -> int:
    _check_word(n, s)
    return sum(extreme_distance(s, i) for i in DIGITS)


def distance_closed(n: int, s: TernaryWord, t: TernaryWord) -> int:
    """Exact distance in O(n) via the recursive structure of ``S^n``.

    After stripping the common prefix, the top digits ``i != j`` select two
    copies of ``S^m``. A shortest path either crosses the bridge between them
    directly or detours through the third copy ``k``, which costs its diameter
    ``2^m - 1`` plus two bridges.
    """
    _check_word(n, s)
    _check_word(n, t)
    top = n
    while top >= 1 and s.digit(top) == t.digit(top):
        top -= 1
    if top == 0:
        return 0
    i, j = s.digit(top), t.digit(top)
    k = 3 - i - j
    m = top - 1
    s_rest, t_rest = s.suffix(m), t.suffix(m)
    direct = extreme_distance(s_rest, j) + 1 + extreme_distance(t_rest, i)
    detour = extreme_distance(s_rest, k) + 1 + (2**m - 1) + 1 + extreme_distance(t_rest, k)
    return min(direct, detour)


def distance_closed_many(n: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorised :func:`distance_closed` over base-3 vertex indices."""
    a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    if n == 0:
        return np.zeros(a.shape, dtype=np.int64)
    powers = 3 ** np.arange(n, dtype=np.int64)
    da = (a[..., None] // powers) % 3
    db = (b[..., None] // powers) % 3
    differ = da != db
    # highest differing position (0-based); -1 when the words are equal
    top = np.where(differ.any(axis=-1), n - 1 - np.argmax(differ[..., ::-1], axis=-1), -1)
    safe = np.maximum(top, 0)[..., None]
    i = np.take_along_axis(da, safe, axis=-1)
    j = np.take_along_axis(db, safe, axis=-1)
    k = 3 - i - j
    below = np.arange(n) < safe
    weights = np.left_shift(1, np.arange(n, dtype=np.int64))

    def ed(digits: np.ndarray, target: np.ndarray) -> np.ndarray:
        return ((digits != target) & below).astype(np.int64) @ weights

    m = np.maximum(top, 0)
    direct = ed(da, j) + 1 + ed(db, i)
    detour = ed(da, k) + ed(db, k) + np.left_shift(1, m) + 1
    return np.where(top < 0, 0, np.minimum(direct, detour))


def distance_bfs(n: int, s: TernaryWord, t: TernaryWord, cap: int = ENUM_CAP) -> int:
    """Shortest-path length by breadth-first search over :func:`neighbors`."""
    _check_order(n, cap)
    _check_word(n, s)
    _check_word(n, t)
    if s == t:
        return 0
    seen = {s}
    frontier = deque([(s, 0)])
    while frontier:
        u, du = frontier.popleft()
        for v, _ in neighbors(n, u):
            if v == t:
                return du + 1
            if v not in seen:
                seen.add(v)
                frontier.append((v, du + 1))
    raise AssertionError("S^n is connected")


def split_trailing_runs(n: int, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised :func:`trailing_run` on base-3 indices of length-``n`` words.

    Returns ``(s_1, run, s_{run+1})``; the last entry is ``-1`` for extreme words.
    """
    idx = np.asarray(idx, dtype=np.int64)
    last = idx % 3
    run = np.ones_like(idx)
    above = np.full_like(idx, -1)
    alive = np.ones(idx.shape, dtype=bool)
    for p in range(1, n):
        digit = (idx // 3**p) % 3
        stop = alive & (digit != last)
        above[stop] = digit[stop]
        alive &= ~stop
        run += alive
    return last, run, above


@lru_cache(maxsize=8)
def adjacency(n: int) -> np.ndarray:
    """Padded ``(3^n, 3)`` neighbour array in :func:`neighbors` order (read-only)."""
    _check_order(n, MAX_ORDER)
    count = 3**n
    adj = np.full((count, 3), -1, dtype=np.int32)
    if n == 0:
        adj.flags.writeable = False
        return adj
    idx = np.arange(count, dtype=np.int64)
    last, run, above = split_trailing_runs(n, idx)
    adj[:, 0] = idx - last + np.where(last == 0, 1, 0)
    adj[:, 1] = idx - last + np.where(last == 2, 1, 2)
    inner = run < n
    r, i, j = run[inner], above[inner], last[inner]
    high = idx[inner] // 3 ** (r + 1)
    adj[inner, 2] = high * 3 ** (r + 1) + j * 3**r + i * (3**r - 1) // 2
    adj.flags.writeable = False
    return adj


def indexed_graph(n: int, cap: int = ENUM_CAP) -> IndexedGraph:
    _check_order(n, cap)
    labels = tuple("".join(p) for p in itertools.product("012", repeat=n))
    return IndexedGraph(labels, adjacency(n))


def total_distance(n: int, s: TernaryWord, cap: int = ENUM_CAP) -> int:
    _check_order(n, cap)
    _check_word(n, s)
    return int(bfs_distances(adjacency(n), s.index).sum())


def d_prime(n: int, s: TernaryWord, cap: int = ENUM_CAP) -> int:
    """Total distance excluding the extreme vertices and the non-clique partner."""
    partner_term = 0 if is_extreme(n, s) else 1
    return total_distance(n, s, cap) - sum_extreme_distances(n, s) - partner_term


def median_sierpinski(n: int, cap: int = ALLPAIRS_CAP, threads: int = 1) -> list[TernaryWord]:
    """Exhaustive arg-min of total distance over all vertices, sorted."""
    _check_order(n, cap)
    report = compute_metrics(indexed_graph(n, cap), threads=threads)
    return [TernaryWord.from_index(int(lab, 3) if lab else 0, n) for lab in report.median]


@dataclass(frozen=True)
class SierpinskiGraph:
    n: int

    @property
    def vertex_count(self) -> int:
        return 3**self.n

    @property
    def edge_count(self) -> int:
        return (3 ** (self.n + 1) - 3) // 2

    def vertices(self, cap: int = ENUM_CAP) -> Iterator[TernaryWord]:
        return vertices(self.n, cap)

    def neighbors(self, s: TernaryWord) -> list[tuple[TernaryWord, EdgeKind]]:
        return neighbors(self.n, s)

    def edges(self, cap: int = ENUM_CAP) -> Iterator[tuple[TernaryWord, TernaryWord, EdgeKind]]:
        return edges(self.n, cap)

    def indexed(self, cap: int = ENUM_CAP) -> IndexedGraph:
        return indexed_graph(self.n, cap)
