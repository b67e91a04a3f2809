from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from sierpinski_median.errors import DisconnectedGraph, InvalidVertex
from sierpinski_median.metrics import (
    IndexedGraph,
    bfs_distances,
    check_lemma1,
    compute_metrics,
    distance_matrix,
    pair_distances,
)


def test_k3(k3):
    r = compute_metrics(k3)
    assert r.median == ("a", "b", "c")
    assert r.proximity == r.remoteness == Fraction(1)
    assert r.diameter == 1


def test_p3(p3):
    r = compute_metrics(p3)
    assert r.median == ("b",)
    assert r.proximity == Fraction(1)
    assert r.remoteness == Fraction(3, 2)
    assert [v.eccentricity for v in r.per_vertex] == [2, 1, 2]


def test_single_vertex():
    r = compute_metrics({"x": []})
    assert r.median == ("x",)
    assert r.proximity == 0 and r.remoteness == 0


def test_disconnected():
    with pytest.raises(DisconnectedGraph):
        compute_metrics({"a": ["b"], "b": ["a"], "c": []})


def test_unknown_label(k3):
    g = IndexedGraph.from_neighbors(k3)
    with pytest.raises(InvalidVertex):
        g.index_of("z")


def test_csv_and_json(p3):
    r = compute_metrics(p3)
    rows = r.to_csv().splitlines()
    assert rows[0] == "vertex,total_distance,avg_num,avg_den,eccentricity,is_median"
    assert rows[2] == "b,2,2,2,1,1"
    assert '"median": [\n    "b"\n  ]' in r.to_json()


def test_lemma1_helper(p3):
    assert check_lemma1(compute_metrics(p3)) == (True, [])


def _random_connected(seed: int, n: int, p: float) -> nx.Graph:
    g = nx.gnp_random_graph(n, p, seed=seed)
    # chain the components so the graph is connected
    comps = [min(c) for c in nx.connected_components(g)]
    g.add_edges_from(zip(comps, comps[1:]))
    return g


@given(st.integers(0, 10_000), st.integers(1, 25), st.floats(0.05, 0.6))
def test_against_networkx(seed, n, p):
    g = _random_connected(seed, n, p)
    r = compute_metrics({v: list(g[v]) for v in g})
    lengths = dict(nx.all_pairs_shortest_path_length(g))
    totals = {v: sum(lengths[v].values()) for v in g}
    best = min(totals.values())
    assert list(r.median) == [str(v) for v in g if totals[v] == best]
    assert [v.eccentricity for v in r.per_vertex] == [max(lengths[v].values()) for v in g]
    assert check_lemma1(r)[0]


@given(st.integers(0, 10_000), st.integers(2, 20), st.sampled_from([1, 2, 3]))
def test_threads_do_not_change_results(seed, n, threads):
    g = _random_connected(seed, n, 0.2)
    graph = IndexedGraph.from_neighbors({v: list(g[v]) for v in g})
    assert compute_metrics(graph, threads) == compute_metrics(graph, 1)
    assert np.array_equal(distance_matrix(graph, threads), distance_matrix(graph, 1))


def test_pair_distances_match_matrix(k3, p3):
    for mapping in (k3, p3):
        g = IndexedGraph.from_neighbors(mapping)
        full = distance_matrix(g)
        a = np.array([2, 0, 1, 2, 0])
        b = np.array([0, 2, 1, 1, 0])
        assert list(pair_distances(g, a, b)) == list(full[a, b])
        assert list(bfs_distances(g, 0)) == list(full[0])
