"""Sierpiński triangle graphs ``Ŝ^n``.

``Ŝ^n`` is ``S^{n+1}`` with every non-clique edge contracted. A non-clique
edge ``{s̄ i j^{d-1}, s̄ j i^{d-1}}`` becomes the vertex ``s̄ k`` with
``k = 3 - i - j`` (a word of length ``n + 2 - d``); the three extreme vertices
``i^{n+1}`` survive as primitive vertices, written ``p0``, ``p1``, ``p2``.
Clique edges of ``S^{n+1}`` become the edges of ``Ŝ^n``.

Vertices are numbered canonically: primitives first, then contracted words
ordered by length and lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from . import sierpinski
from .errors import InvalidCharacter, InvalidVertex, OrderTooLarge, PrimitiveNotAllowed, WrongLength
from .metrics import IndexedGraph, bfs_distances, compute_metrics
from .words import DIGITS, TernaryWord, parse_word, trailing_run

TRI_CAP = 9


@dataclass(frozen=True)
class TriangleVertex:
    """Either a primitive vertex (``corner`` set) or a contracted word."""

    word: TernaryWord | None = None
    corner: int | None = None

    @classmethod
    def primitive(cls, i: int) -> TriangleVertex:
        if i not in DIGITS:
            raise InvalidVertex(f"primitive index must be 0, 1 or 2, got {i!r}")
        return cls(corner=i)

    @classmethod
    def contracted(cls, w: TernaryWord | str) -> TriangleVertex:
        if isinstance(w, str):
            w = parse_word(w)
        if w.length == 0:
            raise InvalidVertex("contracted vertices need a non-empty word")
        return cls(word=w)

    @property
    def is_primitive(self) -> bool:
        return self.corner is not None

    def sort_key(self) -> tuple[int, int, int]:
        if self.corner is not None:
            return (0, 0, self.corner)
        return (1, self.word.length, self.word.packed)

    def __lt__(self, other: TriangleVertex) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.corner is not None:
            return f"p{self.corner}"
        return str(self.word)

    def __repr__(self) -> str:
        return f"TriangleVertex({str(self)!r})"


def parse_vertex(text: str) -> TriangleVertex:
    """Parse ``p0``/``p1``/``p2`` or a non-empty ternary word."""
    if text.startswith("p"):
        if text not in ("p0", "p1", "p2"):
            raise InvalidVertex(f"invalid primitive vertex {text!r}")
        return TriangleVertex.primitive(int(text[1]))
    try:
        return TriangleVertex.contracted(parse_word(text))
    except InvalidCharacter as exc:
        raise InvalidVertex(f"invalid vertex {text!r}: {exc}") from None


def check_vertex(n: int, v: TriangleVertex) -> None:
    if v.word is not None and not 1 <= v.word.length <= n:
        raise InvalidVertex(f"vertex {v} is not in Ŝ^{n} (word length must be 1..{n})")


def vertex_count(n: int) -> int:
    return (3 ** (n + 1) + 3) // 2


def vertex_index(n: int, v: TriangleVertex) -> int:
    check_vertex(n, v)
    if v.corner is not None:
        return v.corner
    length = v.word.length
    return 3 + (3**length - 3) // 2 + v.word.index


def vertex_at(n: int, index: int) -> TriangleVertex:
    if not 0 <= index < vertex_count(n):
        raise InvalidVertex(f"index {index} out of range for Ŝ^{n}")
    if index < 3:
        return TriangleVertex.primitive(index)
    rest = index - 3
    length = 1
    while rest >= 3**length:
        rest -= 3**length
        length += 1
    return TriangleVertex.contracted(TernaryWord.from_index(rest, length))


class LiftedPair(NamedTuple):
    """End vertices in ``S^{n+1}`` of the edge contracted into a vertex."""

    first: TernaryWord
    second: TernaryWord


def lift(n: int, v: TriangleVertex) -> LiftedPair:
    check_vertex(n, v)
    if v.corner is not None:
        extreme = TernaryWord.constant(v.corner, n + 1)
        return LiftedPair(extreme, extreme)
    w = v.word
    k = w.digit(1)
    i, j = (x for x in DIGITS if x != k)
    d = n + 2 - w.length
    head = w.prefix(w.length - 1)
    return LiftedPair(
        head + TernaryWord.from_digits([i] + [j] * (d - 1)),
        head + TernaryWord.from_digits([j] + [i] * (d - 1)),
    )


def project(n: int, s: TernaryWord) -> TriangleVertex:
    """Image of an ``S^{n+1}`` vertex under the contraction."""
    if s.length != n + 1:
        raise WrongLength(f"vertex {s} has length {s.length}, expected {n + 1}")
    j, run = trailing_run(s)
    if run == s.length:
        return TriangleVertex.primitive(j)
    i = s.digit(run + 1)
    head = s.prefix(s.length - run - 1)
    return TriangleVertex.contracted(head + TernaryWord(1, 3 - i - j))


def project_many(n: int, idx: np.ndarray) -> np.ndarray:
    """Vectorised :func:`project` from ``S^{n+1}`` indices to canonical ``Ŝ^n`` indices."""
    idx = np.asarray(idx, dtype=np.int64)
    last, run, above = sierpinski.split_trailing_runs(n + 1, idx)
    length = n + 1 - run
    value = (idx // 3 ** (run + 1)) * 3 + (3 - above - last)
    word_index = 3 + (3**length - 3) // 2 + value
    return np.where(run == n + 1, last, word_index)


def lift_many(n: int) -> tuple[np.ndarray, np.ndarray]:
    """``S^{n+1}`` indices of both lifted endpoints, for every vertex in canonical order."""
    first = np.empty(vertex_count(n), dtype=np.int64)
    second = np.empty_like(first)
    ones = (3 ** (n + 1) - 1) // 2
    first[:3] = second[:3] = np.arange(3) * ones
    pos = 3
    for length in range(1, n + 1):
        w = np.arange(3**length, dtype=np.int64)
        head, k = w // 3, w % 3
        i = np.where(k == 0, 1, 0)
        j = np.where(k == 2, 1, 2)
        d = n + 2 - length
        tail = (3 ** (d - 1) - 1) // 2
        base = head * 3**d
        first[pos : pos + len(w)] = base + i * 3 ** (d - 1) + j * tail
        second[pos : pos + len(w)] = base + j * 3 ** (d - 1) + i * tail
        pos += len(w)
    return first, second


@dataclass(frozen=True)
class TriangleGraph:
    n: int
    vertices: tuple[TriangleVertex, ...]
    adjacency: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index_of(self, v: TriangleVertex) -> int:
        return vertex_index(self.n, v)

    def neighbors(self, v: TriangleVertex) -> list[TriangleVertex]:
        return [self.vertices[u] for u in self.adjacency[self.index_of(v)] if u >= 0]

    def edges(self) -> Iterator[tuple[TriangleVertex, TriangleVertex]]:
        for a, row in enumerate(self.adjacency):
            for b in row:
                if b > a:
                    yield self.vertices[a], self.vertices[b]

    def edge_count(self) -> int:
        return int((self.adjacency >= 0).sum()) // 2

    def degrees(self) -> np.ndarray:
        return (self.adjacency >= 0).sum(axis=1)

    def indexed(self) -> IndexedGraph:
        return IndexedGraph(tuple(str(v) for v in self.vertices), self.adjacency)


def build_triangle(n: int, cap: int = TRI_CAP) -> TriangleGraph:
    """Contract the non-clique edges of ``S^{n+1}``.

    Every clique edge of ``S^{n+1}`` is projected endpoint-wise; duplicates
    are merged.
    """
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > cap:
        raise OrderTooLarge(f"order {n} exceeds cap {cap}")
    idx = np.arange(3 ** (n + 1), dtype=np.int64)
    last = idx % 3
    src, dst = [], []
    for b in DIGITS:
        keep = last < b
        src.append(idx[keep])
        dst.append(idx[keep] - last[keep] + b)
    a = project_many(n, np.concatenate(src))
    b = project_many(n, np.concatenate(dst))
    pairs = np.unique(np.stack([np.minimum(a, b), np.maximum(a, b)], axis=1), axis=0)
    count = vertex_count(n)
    both = np.concatenate([pairs, pairs[:, ::-1]])
    both = both[np.lexsort((both[:, 1], both[:, 0]))]
    degree = np.bincount(both[:, 0], minlength=count)
    adj = np.full((count, max(int(degree.max()), 1)), -1, dtype=np.int32)
    starts = np.concatenate([[0], np.cumsum(degree)[:-1]])
    slot = np.arange(len(both)) - starts[both[:, 0]]
    adj[both[:, 0], slot] = both[:, 1]
    adj.flags.writeable = False
    vertices = tuple(vertex_at(n, x) for x in range(count))
    return TriangleGraph(n, vertices, adj)


def distance_bfs_tri(g: TriangleGraph, s: TriangleVertex, t: TriangleVertex) -> int:
    return int(bfs_distances(g.adjacency, g.index_of(s))[g.index_of(t)])


def _ceil8(x):
    return -(-x // 8)


def distance_formula(n: int, s: TriangleVertex, t: TriangleVertex) -> int:
    """Distance from the four lifted ``S^{n+1}`` distances: ``ceil(sum / 8)``.

    The raw expression gives 1 for ``s == t`` (the two endpoints of a
    contracted edge are adjacent), so that case returns 0 directly.
    """
    if s == t:
        check_vertex(n, s)
        return 0
    return _ceil8(_four_sum(n, s, t))


def _four_sum(n: int, s: TriangleVertex, t: TriangleVertex) -> int:
    s1, s2 = lift(n, s)
    t1, t2 = lift(n, t)
    m = n + 1
    return sum(sierpinski.distance_closed(m, a, b) for a in (s1, s2) for b in (t1, t2))


def distance_formula_many(n: int, s_idx: np.ndarray, t_idx: np.ndarray) -> np.ndarray:
    """Vectorised :func:`distance_formula` over canonical vertex indices."""
    first, second = lift_many(n)
    s_idx = np.asarray(s_idx, dtype=np.int64)
    t_idx = np.asarray(t_idx, dtype=np.int64)
    total = np.zeros(np.broadcast(s_idx, t_idx).shape, dtype=np.int64)
    for a in (first[s_idx], second[s_idx]):
        for b in (first[t_idx], second[t_idx]):
            total += sierpinski.distance_closed_many(n + 1, a, b)
    return np.where(s_idx == t_idx, 0, _ceil8(total))


def delta_pair(n: int, s: TriangleVertex, t: TriangleVertex) -> int:
    """Sum of the four lifted distances, without rounding."""
    if s.is_primitive or t.is_primitive:
        raise PrimitiveNotAllowed("delta is defined on non-primitive vertices only")
    return _four_sum(n, s, t)


def delta_matrix(n: int) -> np.ndarray:
    """``delta_pair`` for all ordered pairs of non-primitive vertices, canonical order."""
    first, second = lift_many(n)
    first, second = first[3:], second[3:]
    total = np.zeros((len(first), len(first)), dtype=np.int64)
    for a in (first, second):
        for b in (first, second):
            total += sierpinski.distance_closed_many(n + 1, a[:, None], b[None, :])
    return total


def delta_total(n: int, s: TriangleVertex) -> int:
    """Sum of ``delta_pair(s, t)`` over every non-primitive ``t != s``.

    The self term (always 2) is left out; with it included the identity
    relating this sum to the ``S^{n+1}`` totals would be off by two.
    """
    if s.is_primitive:
        raise PrimitiveNotAllowed("delta is defined on non-primitive vertices only")
    check_vertex(n, s)
    first, second = lift_many(n)
    first, second = first[3:], second[3:]
    row = vertex_index(n, s) - 3
    total = 0
    for a in (first[row], second[row]):
        for b in (first, second):
            total += int(sierpinski.distance_closed_many(n + 1, a, b).sum())
    return total - 2


def d_hat_total(g: TriangleGraph, s: TriangleVertex) -> int:
    return int(bfs_distances(g.adjacency, g.index_of(s)).sum())


def d_hat_prime(g: TriangleGraph, s: TriangleVertex) -> int:
    """Total distance excluding the three primitive vertices."""
    dist = bfs_distances(g.adjacency, g.index_of(s))
    return int(dist.sum() - dist[:3].sum())


def median_triangle(g: TriangleGraph, threads: int = 1) -> list[TriangleVertex]:
    """Exhaustive arg-min of total distance, in canonical order."""
    report = compute_metrics(g.indexed(), threads=threads)
    lookup = {str(v): v for v in g.vertices}
    return [lookup[lab] for lab in report.median]


KNOWN_MEDIAN = tuple(TriangleVertex.contracted(w) for w in ("0", "1", "2", "00", "11", "22"))


def median_lift_projection(n: int, cap: int = sierpinski.ALLPAIRS_CAP) -> list[TriangleVertex]:
    """Contract the non-clique edges spanned by ``M(S^{n+1})``, sorted canonically."""
    med = set(sierpinski.median_sierpinski(n + 1, cap=cap))
    out = set()
    for m in med:
        partner = sierpinski.nonclique_partner(n + 1, m)
        if partner is not None and partner in med:
            out.add(project(n, m))
    return sorted(out)
