import math

import networkx as nx
import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from specex import spectral
from specex.graphcore import (
    Graph,
    clique_path,
    clique_star,
    complete_graph,
    cycle_graph,
    path_graph,
    turan_union,
)
from specex.spectral import (
    char_poly_exact,
    closed_walks,
    compare_largest_roots,
    spectral_radius,
    walk_ratio_check,
)
from test_graphcore import graphs

PAW = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@pytest.mark.parametrize("g,expected", [
    (complete_graph(4), 3.0),
    (cycle_graph(6), 2.0),
    (path_graph(6), 2 * math.cos(math.pi / 7)),
    (clique_path(6, 2), 1 + math.sqrt(2)),
    (clique_star(6, 3), math.sqrt(2 + math.sqrt(3))),
    (turan_union(6, 3), 1.0),
])
def test_spectral_radius_known_values(g, expected):
    res = spectral_radius(g)
    assert res.lam == pytest.approx(expected, abs=1e-10)
    assert res.residual <= 1e-10


def test_perron_vector_is_positive_unit():
    res = spectral_radius(clique_path(9, 3))
    x = np.array(res.perron)
    assert np.all(x > 0)
    assert np.linalg.norm(x) == pytest.approx(1.0)


def test_disconnected_graph_uses_dominant_component():
    g = turan_union(5, 2)
    res = spectral_radius(g)
    assert res.lam == pytest.approx(2.0, abs=1e-10)
    assert all(v == 0 for v in res.perron[3:])


def test_edgeless_graph_has_radius_zero():
    assert spectral_radius(Graph.empty(3)).lam == 0.0


def test_iteration_cap_is_enforced():
    with pytest.raises(spectral.ConvergenceError):
        spectral_radius(path_graph(30), tol=1e-14, cap=5)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_spectral_radius_matches_dense_eigensolver(g):
    lam = spectral_radius(g).lam
    assert lam == pytest.approx(np.linalg.eigvalsh(g.to_numpy())[-1], abs=1e-8)


def test_char_poly_examples():
    assert char_poly_exact(complete_graph(3)) == (1, 0, -3, -2)
    assert char_poly_exact(Graph.empty(1)) == (1, 0)
    x = sympy.symbols("x")
    p = sympy.Poly(char_poly_exact(clique_path(6, 2)), x)
    q = sympy.Poly(x**4 - 2 * x**3 - 4 * x**2 + 6 * x + 3, x)
    assert p.rem(q).is_zero


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_char_poly_matches_sympy(g):
    x = sympy.symbols("x")
    expected = sympy.Matrix(g.to_int_matrix()).charpoly(x).all_coeffs()
    assert list(char_poly_exact(g)) == [int(c) for c in expected]


def test_char_poly_order_cap():
    with pytest.raises(ValueError):
        char_poly_exact(path_graph(17))


def test_compare_largest_roots():
    p4 = char_poly_exact(path_graph(4))
    c4 = char_poly_exact(cycle_graph(4))
    assert compare_largest_roots(c4, p4) == 1
    assert compare_largest_roots(p4, c4) == -1
    assert compare_largest_roots(p4, p4) == 0
    # rational largest roots sitting at interval endpoints
    assert compare_largest_roots((1, -2), (1, -3, 2)) == 0
    assert compare_largest_roots((1, -2), (1, -1)) == 1


def test_closed_walk_examples():
    g = clique_path(7, 3)
    for v in range(g.n):
        assert closed_walks(g, v, 2) == g.degree(v)
    assert closed_walks(complete_graph(3), 0, 3) == 2
    assert closed_walks(cycle_graph(4), 1, 3) == 0


def test_walk_ratio_paw():
    trace = walk_ratio_check(PAW, 2, 3, 200)
    assert trace.final_ratio > 1 and trace.perron_i > trace.perron_j
    assert trace.verdict and trace.limit_gap <= 1e-6
    sym = walk_ratio_check(PAW, 0, 1, 50)
    assert all(si == sj for _, si, sj in sym.ratios) and sym.verdict


def test_walk_ratio_vertex_transitive():
    trace = walk_ratio_check(cycle_graph(5), 0, 2, 60)
    assert all(si == sj for _, si, sj in trace.ratios)
    assert trace.perron_i == pytest.approx(trace.perron_j)


def test_walk_ratio_rejects_bipartite_or_disconnected():
    with pytest.raises(ValueError):
        walk_ratio_check(path_graph(4), 0, 1, 10)
    with pytest.raises(ValueError):
        walk_ratio_check(turan_union(6, 2), 0, 1, 10)
