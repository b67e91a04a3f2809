"""Distance metrics of arbitrary finite connected graphs.

Total distance, average distance, eccentricity, median, proximity and
remoteness are all computed exactly from one BFS per source vertex. Average
distances are kept as exact fractions so median membership never depends on
floating point rounding.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

import numpy as np

from . import _bfs
from .errors import DisconnectedGraph, InvalidVertex


@dataclass(frozen=True)
class IndexedGraph:
    """Vertices ``0..N-1`` with printable labels and a padded adjacency array."""

    labels: tuple[str, ...]
    adjacency: np.ndarray
    _index: dict[str, int] = field(default=None, repr=False, compare=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.adjacency.shape[0] != len(self.labels):
            raise ValueError("adjacency rows must match the number of labels")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @classmethod
    def from_neighbors(cls, neighbors: Mapping[Hashable, Iterable[Hashable]]) -> IndexedGraph:
        """Build from any neighbour mapping; vertex order follows the mapping."""
        keys = list(neighbors)
        pos = {k: i for i, k in enumerate(keys)}
        rows = [[pos[u] for u in neighbors[k]] for k in keys]
        width = max((len(r) for r in rows), default=0)
        adj = np.full((len(keys), max(width, 1)), -1, dtype=np.int32)
        for i, r in enumerate(rows):
            adj[i, : len(r)] = r
        return cls(tuple(str(k) for k in keys), adj)

    @property
    def order(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidVertex(f"unknown vertex {label!r}") from None

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in self.adjacency[v] if u >= 0]

    def degrees(self) -> np.ndarray:
        return (self.adjacency >= 0).sum(axis=1)

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2


def bfs_distances(graph: IndexedGraph | np.ndarray, source: int) -> np.ndarray:
    """Distances from ``source`` to every vertex (``-1`` if unreachable)."""
    adj = graph.adjacency if isinstance(graph, IndexedGraph) else graph
    dist = np.empty(adj.shape[0], dtype=np.int32)
    _bfs.single_source(adj, np.int32(source), dist)
    return dist


def distance_matrix(graph: IndexedGraph, threads: int = 1) -> np.ndarray:
    """Full ``N x N`` distance matrix; intended for graphs of a few thousand vertices."""
    n = graph.order
    out = np.empty((n, n), dtype=np.int32)
    sources = np.arange(n, dtype=np.int32)

    def work(chunk: slice) -> None:
        _bfs.distance_rows(graph.adjacency, sources[chunk], out[chunk])

    _fan_out(work, n, threads)
    return out


def pair_distances(graph: IndexedGraph, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """BFS distances for many pairs, one BFS per distinct source."""
    src = np.asarray(src, dtype=np.int32)
    dst = np.asarray(dst, dtype=np.int32)
    order = np.argsort(src, kind="stable")
    out = np.empty(len(src), dtype=np.int32)
    tmp = np.empty(len(src), dtype=np.int32)
    _bfs.pair_distances(graph.adjacency, src[order], dst[order], tmp)
    out[order] = tmp
    return out


def _fan_out(work, n: int, threads: int) -> None:
    if threads <= 1 or n < 2 * threads:
        work(slice(0, n))
        return
    bounds = np.linspace(0, n, threads + 1).astype(int)
    chunks = [slice(a, b) for a, b in zip(bounds[:-1], bounds[1:])]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(work, chunks))


def source_summaries(graph: IndexedGraph, threads: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex total distance and eccentricity; raises if disconnected."""
    n = graph.order
    totals = np.zeros(n, dtype=np.int64)
    eccs = np.zeros(n, dtype=np.int32)
    reached = np.zeros(n, dtype=np.int64)
    sources = np.arange(n, dtype=np.int32)

    def work(chunk: slice) -> None:
        _bfs.source_summaries(graph.adjacency, sources[chunk], totals[chunk], eccs[chunk], reached[chunk])

    _fan_out(work, n, threads)
    short = np.flatnonzero(reached < n)
    if len(short):
        raise DisconnectedGraph(f"vertex {graph.labels[short[0]]!r} does not reach all {n} vertices")
    return totals, eccs


@dataclass(frozen=True)
class VertexMetrics:
    vertex: str
    total_distance: int
    eccentricity: int
    order: int

    @property
    def avg_distance(self) -> Fraction:
        if self.order < 2:
            return Fraction(0)
        return Fraction(self.total_distance, self.order - 1)


@dataclass(frozen=True)
class MetricsReport:
    order: int
    per_vertex: tuple[VertexMetrics, ...]
    median: tuple[str, ...]
    proximity: Fraction
    remoteness: Fraction
    # not needed for the median; a sanity bound on BFS depths
    diameter: int

    def to_csv(self) -> str:
        median = set(self.median)
        den = max(self.order - 1, 0)
        lines = ["vertex,total_distance,avg_num,avg_den,eccentricity,is_median"]
        for v in self.per_vertex:
            lines.append(
                f"{v.vertex},{v.total_distance},{v.total_distance},{den},{v.eccentricity},"
                f"{int(v.vertex in median)}"
            )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        def frac(x: Fraction) -> dict:
            return {"num": x.numerator, "den": x.denominator, "value": round(float(x), 6)}

        return {
            "order": self.order,
            "diameter": self.diameter,
            "median": list(self.median),
            "proximity": frac(self.proximity),
            "remoteness": frac(self.remoteness),
            "per_vertex": [
                {
                    "vertex": v.vertex,
                    "total_distance": v.total_distance,
                    "avg_num": v.total_distance,
                    "avg_den": max(self.order - 1, 0),
                    "eccentricity": v.eccentricity,
                }
                for v in self.per_vertex
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def compute_metrics(graph: IndexedGraph | Mapping[Hashable, Iterable[Hashable]], threads: int = 1) -> MetricsReport:
    """Exact metric report of a connected graph.

    A single-vertex graph yields a degenerate report with all values zero.
    """
    if not isinstance(graph, IndexedGraph):
        graph = IndexedGraph.from_neighbors(graph)
    n = graph.order
    if n == 0:
        raise ValueError("graph has no vertices")
    totals, eccs = source_summaries(graph, threads)
    per_vertex = tuple(
        VertexMetrics(graph.labels[i], int(totals[i]), int(eccs[i]), n) for i in range(n)
    )
    best = int(totals.min())
    # all averages share the denominator n-1, so integer totals order them exactly
    median = tuple(graph.labels[i] for i in np.flatnonzero(totals == best))
    if n == 1:
        prox = rem = Fraction(0)
    else:
        prox = Fraction(best, n - 1)
        rem = Fraction(int(totals.max()), n - 1)
    return MetricsReport(n, per_vertex, median, prox, rem, int(eccs.max()))


def check_lemma1(report: MetricsReport) -> tuple[bool, list[str]]:
    """Check ``N-1 <= d(v) <= (N-1) ecc(v)`` and ``1 <= avg(v) <= ecc(v)`` for every vertex."""
    n = report.order
    if n < 2:
        return True, []
    bad = []
    for v in report.per_vertex:
        ok = n - 1 <= v.total_distance <= (n - 1) * v.eccentricity
        ok = ok and 1 <= v.avg_distance <= v.eccentricity
        if not ok:
            bad.append(v.vertex)
    return not bad, bad

