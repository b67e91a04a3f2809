import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from sierpinski_median import sierpinski as S
from sierpinski_median.errors import OrderTooLarge, WrongLength
from sierpinski_median.sierpinski import EdgeKind
from sierpinski_median.words import TernaryWord, parse_word as W

from .oracles import in_triangle, sierpinski_recursive


def word_in(n):
    return st.integers(0, 3**n - 1).map(lambda x: TernaryWord.from_index(x, n))


order_and_pair = st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), word_in(n), word_in(n)))


def test_neighbors_examples():
    assert S.neighbors(2, W("01")) == [
        (W("00"), EdgeKind.CLIQUE),
        (W("02"), EdgeKind.CLIQUE),
        (W("10"), EdgeKind.NONCLIQUE),
    ]
    assert S.neighbors(3, W("000")) == [(W("001"), EdgeKind.CLIQUE), (W("002"), EdgeKind.CLIQUE)]
    assert S.neighbors(0, TernaryWord(0, 0)) == []


def test_partner_examples():
    assert S.nonclique_partner(3, W("011")) == W("100")
    assert S.nonclique_partner(4, W("0122")) == W("0211")
    assert S.nonclique_partner(2, W("22")) is None


def test_closed_examples():
    assert S.distance_closed(4, W("0122"), W("0211")) == 1
    assert S.distance_closed(3, W("000"), W("222")) == 7
    assert S.distance_closed(3, W("012"), W("012")) == 0


def test_wrong_length_and_cap():
    with pytest.raises(WrongLength):
        S.neighbors(3, W("01"))
    with pytest.raises(OrderTooLarge):
        list(S.vertices(13))


@pytest.mark.parametrize("n", range(0, 6))
def test_graph_equals_recursive_oracle(n):
    oracle = sierpinski_recursive(n)
    ours = nx.Graph()
    ours.add_nodes_from(str(s) for s in S.vertices(n))
    ours.add_edges_from((str(u), str(v)) for u, v, _ in S.edges(n))
    assert set(ours.nodes) == set(oracle.nodes)
    assert {frozenset(e) for e in ours.edges} == {frozenset(e) for e in oracle.edges}
    for u, v, kind in S.edges(n):
        assert (kind is EdgeKind.CLIQUE) == in_triangle(oracle, str(u), str(v))


@pytest.mark.parametrize("n", range(0, 8))
def test_adjacency_matches_neighbors(n):
    adj = S.adjacency(n)
    for s in S.vertices(n):
        want = [t.index for t, _ in S.neighbors(n, s)]
        assert [int(x) for x in adj[s.index] if x >= 0] == want


@pytest.mark.parametrize("n", range(1, 7))
def test_counts(n):
    g = S.SierpinskiGraph(n)
    assert sum(1 for _ in g.edges()) == g.edge_count == (3 ** (n + 1) - 3) // 2
    extremes = [s for s in g.vertices() if S.is_extreme(n, s)]
    assert [str(s) for s in extremes] == ["0" * n, "1" * n, "2" * n]


@given(order_and_pair)
def test_closed_matches_bfs(args):
    n, s, t = args
    assert S.distance_closed(n, s, t) == S.distance_bfs(n, s, t)


@given(order_and_pair)
def test_closed_many_matches_scalar(args):
    n, s, t = args
    assert int(S.distance_closed_many(n, s.index, t.index)) == S.distance_closed(n, s, t)


@given(order_and_pair)
def test_metric_symmetry(args):
    n, s, t = args
    assert S.distance_closed(n, s, t) == S.distance_closed(n, t, s)
    assert (S.distance_closed(n, s, t) == 0) == (s == t)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), word_in(n))))
def test_extreme_sum(args):
    n, s = args
    assert S.sum_extreme_distances(n, s) == 2 * (2**n - 1)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), word_in(n))))
def test_partner_is_involution(args):
    n, s = args
    p = S.nonclique_partner(n, s)
    assert (p is None) == S.is_extreme(n, s)
    if p is not None:
        assert S.nonclique_partner(n, p) == s
        assert S.distance_closed(n, s, p) == 1


def test_extreme_distance_many():
    n = 5
    idx = np.arange(3**n)
    for i in range(3):
        want = [S.extreme_distance(TernaryWord.from_index(x, n), i) for x in idx]
        assert list(S.extreme_distance_many(n, idx, i)) == want


@pytest.mark.parametrize("n", range(0, 5))
def test_median_against_networkx(n):
    g = sierpinski_recursive(n)
    totals = {v: sum(d.values()) for v, d in nx.all_pairs_shortest_path_length(g)}
    best = min(totals.values())
    assert [str(w) for w in S.median_sierpinski(n)] == sorted(v for v in g if totals[v] == best)


def test_d_prime_small():
    # extremes and the partner are dropped from the sum
    n = 2
    for s in S.vertices(n):
        dist = {t: S.distance_bfs(n, s, t) for t in S.vertices(n)}
        drop = {W(i * n) for i in "012"} | {S.nonclique_partner(n, s)}
        assert S.d_prime(n, s) == sum(d for t, d in dist.items() if t not in drop)


def test_total_distance_matches_bfs():
    n = 4
    for s in itertools.islice(S.vertices(n), 0, 81, 7):
        assert S.total_distance(n, s) == sum(S.distance_bfs(n, s, t) for t in S.vertices(n))
