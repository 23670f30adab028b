from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexdet.graph_core import (
    DuplicateEdge,
    IndexOutOfRange,
    SelfLoop,
    WeightedGraph,
    ZeroWeightEdge,
    adjacency_matrix,
    connected_components,
    cycle_graph,
    disjoint_union,
    graph_new,
    neighbors,
    path_graph,
    remove_vertices,
    set_edge_weight,
)
from hexdet.hexgrid import GridSpec, build_grid


@st.composite
def graphs(draw, max_vertices=8):
    n = draw(st.integers(0, max_vertices))
    weights = {}
    for a in range(n):
        for b in range(a + 1, n):
            if draw(st.booleans()):
                num = draw(st.integers(-5, 5).filter(bool))
                den = draw(st.integers(1, 6))
                weights[(a, b)] = Fraction(num, den)
    return WeightedGraph(n, weights)


def test_graph_new_empty():
    g = graph_new(0, [])
    assert g.vertex_count == 0 and g.edge_count == 0


def test_graph_new_p2():
    g = graph_new(2, [(0, 1, 1)])
    assert dict(g.weights) == {(0, 1): 1}


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 1, 1), (0, 1, 2)], DuplicateEdge),
        (3, [(0, 1, 1), (1, 0, 2)], DuplicateEdge),
        (3, [(1, 1, 1)], SelfLoop),
        (3, [(0, 2, 0)], ZeroWeightEdge),
        (3, [(0, 3, 1)], IndexOutOfRange),
        (3, [(-1, 0, 1)], IndexOutOfRange),
    ],
)
def test_graph_new_rejects(n, edges, exc):
    with pytest.raises(exc):
        graph_new(n, edges)


def test_float_weights_rejected():
    with pytest.raises(TypeError):
        graph_new(2, [(0, 1, 0.5)])


def test_set_edge_weight():
    g = path_graph([1, 1])
    assert set_edge_weight(g, 0, 1, 0).edge_count == 1
    h = set_edge_weight(g, 2, 0, Fraction(5, 3))
    assert h.weight(0, 2) == Fraction(5, 3) and h.edge_count == 3
    k = set_edge_weight(g, 0, 2, Fraction(10, -4))
    w = k.weight(2, 0)
    assert (w.numerator, w.denominator) == (-5, 2)
    with pytest.raises(SelfLoop):
        set_edge_weight(g, 1, 1, 2)
    # original is untouched
    assert g.edge_count == 2


def test_neighbors():
    g = path_graph([1, 1])
    assert neighbors(g, 1) == {0, 2}
    assert neighbors(WeightedGraph(3), 1) == set()
    with pytest.raises(IndexOutOfRange):
        neighbors(g, 3)


def test_neighbors_on_smallest_grid():
    g, lab = build_grid(GridSpec(1, 1, 0))
    got = {lab.label(v) for v in neighbors(g, lab.index(1, 2))}
    assert got == {(1, 1), (1, 3)}


def test_connected_components():
    assert connected_components(WeightedGraph(3)) == [[0], [1], [2]]
    assert connected_components(cycle_graph([1] * 6)) == [list(range(6))]
    p2 = graph_new(2, [(0, 1, 1)])
    assert [len(c) for c in connected_components(disjoint_union(p2, p2))] == [2, 2]


def test_adjacency_matrix_examples():
    w = Fraction(-7, 3)
    assert adjacency_matrix(graph_new(2, [(0, 1, w)])) == [[0, w], [w, 0]]
    assert adjacency_matrix(WeightedGraph(2)) == [[0, 0], [0, 0]]
    c3 = adjacency_matrix(cycle_graph([1, 1, 1]))
    assert c3 == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_remove_vertices_examples():
    p2 = graph_new(2, [(0, 1, 1)])
    assert remove_vertices(p2, {0, 1})[0] == WeightedGraph(0)
    h, mapping = remove_vertices(path_graph([1, 1]), {1})
    assert h == WeightedGraph(2) and mapping == {0: 0, 2: 1}
    p4, _ = remove_vertices(cycle_graph([1] * 6), {0, 1})
    assert p4 == path_graph([1, 1, 1])
    with pytest.raises(IndexOutOfRange):
        remove_vertices(p2, {2})


@given(graphs())
def test_adjacency_symmetric_zero_diagonal(g):
    a = adjacency_matrix(g)
    n = g.vertex_count
    assert all(a[i][i] == 0 for i in range(n))
    assert all(a[i][j] == a[j][i] for i in range(n) for j in range(n))


@given(graphs())
def test_representation_invariants(g):
    for (a, b), w in g.weights.items():
        assert 0 <= a < b < g.vertex_count
        assert isinstance(w, Fraction) and w != 0


@given(graphs(), st.data())
def test_set_then_clear_removes_pair(g, data):
    if g.vertex_count < 2:
        return
    a = data.draw(st.integers(0, g.vertex_count - 1))
    b = data.draw(st.integers(0, g.vertex_count - 1).filter(lambda b: b != a))
    h = set_edge_weight(set_edge_weight(g, a, b, 3), a, b, 0)
    assert set(h.weights) == set(g.weights) - {(min(a, b), max(a, b))}


@given(graphs())
def test_remove_nothing_is_identity(g):
    h, mapping = remove_vertices(g, set())
    assert h == g and mapping == {v: v for v in range(g.vertex_count)}
