import numpy as np
import pytest
from hypothesis import given, strategies as st

from sierpinski_median import sierpinski as S
from sierpinski_median import triangle as T
from sierpinski_median.errors import InvalidVertex, OrderTooLarge, PrimitiveNotAllowed
from sierpinski_median.triangle import TriangleVertex
from sierpinski_median.words import TernaryWord, parse_word as W

from .oracles import contracted_triangle

V = TriangleVertex.contracted
P = TriangleVertex.primitive


def vertex_in(n):
    return st.integers(0, T.vertex_count(n) - 1).map(lambda x: T.vertex_at(n, x))


order_and_pair = st.integers(0, 6).flatmap(lambda n: st.tuples(st.just(n), vertex_in(n), vertex_in(n)))


def test_parse_vertex():
    assert T.parse_vertex("p2") == P(2)
    assert T.parse_vertex("021") == V("021")
    for bad in ("p3", "", "x1", "p"):
        with pytest.raises(Exception) as exc:
            T.parse_vertex(bad)
        assert isinstance(exc.value, ValueError)


def test_check_vertex_length():
    with pytest.raises(InvalidVertex):
        T.check_vertex(2, V("012"))
    T.check_vertex(2, V("01"))


def test_lift_examples():
    assert tuple(T.lift(2, V("01"))) == (W("002"), W("020"))
    assert tuple(T.lift(2, V("00"))) == (W("012"), W("021"))
    assert tuple(T.lift(1, P(0))) == (W("00"), W("00"))


def test_project_examples():
    assert T.project(3, W("1222")) == V("0")
    assert T.project(2, W("020")) == V("01")
    assert T.project(2, W("111")) == P(1)


def test_canonical_order():
    assert [str(T.vertex_at(1, x)) for x in range(6)] == ["p0", "p1", "p2", "0", "1", "2"]
    assert str(T.vertex_at(2, 6)) == "00"
    for n in range(4):
        verts = [T.vertex_at(n, x) for x in range(T.vertex_count(n))]
        assert verts == sorted(verts)
        assert [T.vertex_index(n, v) for v in verts] == list(range(len(verts)))


@pytest.mark.parametrize("n", range(0, 5))
def test_contraction_matches_networkx(n):
    g = T.build_triangle(n)
    oracle = contracted_triangle(n)
    assert oracle.number_of_nodes() == g.order
    # each surviving S^{n+1} word names its contracted vertex
    name = {v: str(T.project(n, W(v))) for v in oracle}
    assert len(set(name.values())) == g.order
    want = {frozenset((name[u], name[v])) for u, v in oracle.edges}
    assert {frozenset((str(u), str(v))) for u, v in g.edges()} == want


@pytest.mark.parametrize("n", range(0, 7))
def test_counts_and_degrees(n):
    g = T.build_triangle(n)
    assert g.order == (3 ** (n + 1) + 3) // 2
    assert g.edge_count() == 3 ** (n + 1)
    deg = g.degrees()
    assert list(deg[:3]) == [2, 2, 2]
    assert set(deg[3:].tolist()) <= {4}


def test_st0_is_triangle():
    g = T.build_triangle(0)
    assert sorted((str(u), str(v)) for u, v in g.edges()) == [("p0", "p1"), ("p0", "p2"), ("p1", "p2")]


def test_cap():
    with pytest.raises(OrderTooLarge):
        T.build_triangle(10)


@given(order_and_pair)
def test_formula_matches_bfs(args):
    n, s, t = args
    g = T.build_triangle(n)
    assert T.distance_formula(n, s, t) == T.distance_bfs_tri(g, s, t)


@given(st.integers(0, 8).flatmap(lambda n: st.tuples(st.just(n), vertex_in(n))))
def test_lift_project_round_trip(args):
    n, v = args
    a, b = T.lift(n, v)
    assert T.project(n, a) == T.project(n, b) == v
    if not v.is_primitive:
        assert S.nonclique_partner(n + 1, a) == b


@given(st.integers(0, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 3 ** (n + 1) - 1))))
def test_project_many_matches_scalar(args):
    n, x = args
    s = TernaryWord.from_index(x, n + 1)
    assert T.vertex_at(n, int(T.project_many(n, np.array([x]))[0])) == T.project(n, s)


def test_case1_fixture():
    # four lifted distances 2, 3, 1, 2
    assert T.delta_pair(2, V("01"), V("1")) == 8
    assert T.distance_formula(2, V("01"), V("1")) == 1


def test_delta_examples():
    assert T.delta_pair(2, V("01"), V("00")) == 8
    assert T.delta_pair(1, V("0"), V("1")) == 8
    assert T.delta_total(1, V("0")) == 16
    with pytest.raises(PrimitiveNotAllowed):
        T.delta_pair(2, P(0), V("00"))


@pytest.mark.parametrize("n", range(1, 5))
def test_self_delta_is_two(n):
    m = T.delta_matrix(n)
    assert set(np.diag(m).tolist()) == {2}
    assert np.array_equal(m, m.T)


@pytest.mark.parametrize("n", range(1, 4))
def test_delta_total_matches_rows(n):
    m = T.delta_matrix(n)
    for row in range(m.shape[0]):
        v = T.vertex_at(n, row + 3)
        assert T.delta_total(n, v) == int(m[row].sum()) - 2


def test_median_of_small_orders():
    assert [str(v) for v in T.median_triangle(T.build_triangle(0))] == ["p0", "p1", "p2"]
    assert [str(v) for v in T.median_triangle(T.build_triangle(1))] == ["0", "1", "2"]
    assert tuple(T.median_triangle(T.build_triangle(3))) == T.KNOWN_MEDIAN


def test_median_identity_example():
    g = T.build_triangle(2)
    assert 8 * T.d_hat_prime(g, V("0")) == T.delta_total(2, V("0")) + 3**2 - 3
