import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import leibniz_det, random_graph
from hexdet.det_oracles import (
    NonSquareMatrix,
    TooLargeForEnumeration,
    bareiss_det,
    enumerate_basic_figures,
    graph_det,
    sachs_det,
)
from hexdet.graph_core import (
    WeightedGraph,
    adjacency_matrix,
    cycle_graph,
    disjoint_union,
    graph_new,
    path_graph,
    relabel,
)
from hexdet.hexgrid import GridSpec, build_grid

K4 = graph_new(4, [(a, b, 1) for a in range(4) for b in range(a + 1, 4)])


def test_enumerate_paths():
    assert enumerate_basic_figures(path_graph([1, 1])) == []
    figs = enumerate_basic_figures(path_graph([1, 1, 1]))
    assert len(figs) == 1
    assert figs[0].p2_edges == {(0, 1), (2, 3)} and figs[0].cycles == ()


def test_enumerate_c6():
    figs = enumerate_basic_figures(cycle_graph([1] * 6))
    assert len(figs) == 3
    assert sum(1 for f in figs if f.cycles) == 1
    matchings = {f.p2_edges for f in figs if not f.cycles}
    assert matchings == {
        frozenset({(0, 1), (2, 3), (4, 5)}),
        frozenset({(1, 2), (3, 4), (0, 5)}),
    }
    (cycle_fig,) = [f for f in figs if f.cycles]
    assert cycle_fig.cycles == ((0, 1, 2, 3, 4, 5),)


def test_figures_canonical_spanning_and_unique(rng):
    for _ in range(40):
        g = random_graph(rng, max_vertices=8)
        figs = enumerate_basic_figures(g)
        assert len(set(figs)) == len(figs)
        for f in figs:
            assert f.vertices() == set(range(g.vertex_count))
            for a, b in f.p2_edges:
                assert g.weight(a, b) != 0
            for a, b in f.cycle_edges():
                assert g.weight(a, b) != 0
            for cyc in f.cycles:
                assert len(cyc) >= 3
                assert cyc[0] == min(cyc) and cyc[1] < cyc[-1]


def test_enumeration_cap():
    big = WeightedGraph(25)
    with pytest.raises(TooLargeForEnumeration):
        enumerate_basic_figures(big)
    assert enumerate_basic_figures(big, cap=-1) == []
    with pytest.raises(TooLargeForEnumeration):
        sachs_det(path_graph([1] * 5), cap=4)


def test_enum_cap_env(monkeypatch):
    monkeypatch.setenv("HEXDET_ENUM_CAP", "3")
    with pytest.raises(TooLargeForEnumeration):
        sachs_det(path_graph([1] * 3))


def test_sachs_examples():
    assert sachs_det(cycle_graph([1, 1, 1])) == 2
    assert sachs_det(cycle_graph([1] * 6)) == -4
    assert sachs_det(K4) == -3
    assert sachs_det(WeightedGraph(0)) == 1


def test_k4_by_independent_routes():
    # 3 perfect matchings (+1 each) and 3 Hamiltonian 4-cycles (-2 each)
    assert bareiss_det(adjacency_matrix(K4)) == -3
    assert leibniz_det(adjacency_matrix(K4)) == -3


def test_bareiss_examples():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert graph_det(build_grid(GridSpec(1, 1, 0))[0]) == -4
    assert graph_det(cycle_graph([1] * 4)) == 0
    assert bareiss_det([]) == 1
    assert bareiss_det([[Fraction(3, 4)]]) == Fraction(3, 4)


def test_bareiss_non_square():
    with pytest.raises(NonSquareMatrix):
        bareiss_det([[1, 2]])
    with pytest.raises(NonSquareMatrix):
        bareiss_det([[1, 2], [3]])


def test_bareiss_needs_row_swap():
    m = [[0, 0, 1], [0, 2, 0], [3, 0, 0]]
    assert bareiss_det(m) == leibniz_det(m) == -6


def test_bareiss_against_leibniz_general_matrices(rng):
    for _ in range(60):
        n = rng.randint(1, 6)
        m = [[Fraction(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(m) == leibniz_det(m)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_oracles_agree(seed):
    g = random_graph(random.Random(seed), max_vertices=10)
    assert sachs_det(g) == graph_det(g)


def test_permutation_invariance(rng):
    for _ in range(30):
        g = random_graph(rng, max_vertices=8)
        perm = list(range(g.vertex_count))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert graph_det(h) == graph_det(g)
        assert sachs_det(h) == sachs_det(g)


def test_disjoint_union_multiplies(rng):
    for _ in range(30):
        g = random_graph(rng, max_vertices=5)
        h = random_graph(rng, max_vertices=5)
        u = disjoint_union(g, h)
        assert graph_det(u) == graph_det(g) * graph_det(h)
        assert sachs_det(u) == sachs_det(g) * sachs_det(h)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_odd_paths_singular(n):
    g = path_graph([Fraction(i + 2, 3) for i in range(n - 1)])
    assert enumerate_basic_figures(g) == []
    assert sachs_det(g) == 0 == graph_det(g)


def test_integer_weights_give_integers(rng):
    for _ in range(30):
        n = rng.randint(1, 9)
        g = graph_new(n, [(a, b, rng.choice([-2, -1, 1, 3]))
                          for a in range(n) for b in range(a + 1, n) if rng.random() < 0.5])
        assert graph_det(g).denominator == 1
        assert sachs_det(g).denominator == 1


def test_even_components_matches_textbook_exponent(rng):
    # sg counts even components; the usual exponent is n minus the number of components
    for _ in range(40):
        g = random_graph(rng, max_vertices=9)
        for f in enumerate_basic_figures(g):
            components = len(f.p2_edges) + len(f.cycles)
            assert f.even_components % 2 == (g.vertex_count - components) % 2
