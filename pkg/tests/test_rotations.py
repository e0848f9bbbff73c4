import numpy as np
import pytest

from specex.extremal import (
    RotationInstance,
    build_L2_instance,
    build_L5_instance,
    build_L6_instance,
    rotation_grid,
    verify_rotation,
)
from specex.extremal.rotations import contains_subgraph, host_catalog
from specex.graphcore import (
    clique_path,
    complete_graph,
    cut_vertices,
    cycle_graph,
    is_connected,
    path_graph,
)


def _eig(g):
    return np.linalg.eigvalsh(g.to_numpy())[-1]


def _end(h):
    return min(set(range(h.n)) - set(cut_vertices(h)))


def test_L2_preserves_order_size_and_connectivity():
    h = clique_path(8, 4)
    inst = build_L2_instance(h, _end(h), 2, 1, 1)
    g, gp = inst
    assert g.n == gp.n and g.edge_count == gp.edge_count
    assert is_connected(g) and is_connected(gp)


@pytest.mark.parametrize("h,k,l,p", [
    (path_graph(4), 2, 1, 1),
    (clique_path(9, 3), 3, 1, 2),
])
def test_L2_examples_increase(h, k, l, p):
    inst = build_L2_instance(h, _end(h), k, l, p)
    g, gp = inst
    assert _eig(gp) > _eig(g) + 1e-9
    assert verify_rotation(inst, "increase").ok


def test_L2_requires_clique_path_avoiding_junction():
    with pytest.raises(ValueError):
        build_L2_instance(complete_graph(2), 0, 2, 1, 1)
    with pytest.raises(ValueError):
        build_L2_instance(path_graph(4), 1, 2, 1, 1)  # cut vertex


@pytest.mark.parametrize("base,paths", [
    (complete_graph(3), (1, 1)),
    (complete_graph(2), (1, 1)),
    (complete_graph(3), (2, 1, 1)),
])
def test_L5_examples_decrease(base, paths):
    inst = build_L5_instance(base, 0, 1, paths)
    g, gp = inst
    assert _eig(gp) < _eig(g) - 1e-9
    assert verify_rotation(inst, "decrease").ok


def test_L5_rejects_single_path_and_degree_mismatch():
    with pytest.raises(ValueError):
        build_L5_instance(complete_graph(3), 0, 1, (1,))
    with pytest.raises(ValueError):
        build_L5_instance(path_graph(3), 0, 1, (1, 1))


@pytest.mark.parametrize("h,k,l,p", [
    (path_graph(4), 2, 1, 1),
    (clique_path(6, 2), 3, 1, 1),
])
def test_L6_examples_increase(h, k, l, p):
    inst = build_L6_instance(h, _end(h), k, l, p)
    g, gp = inst
    assert _eig(gp) > _eig(g) + 1e-9
    assert verify_rotation(inst, "increase").ok


def test_L6_rejects_complete_host_and_empty_tail():
    with pytest.raises(ValueError):
        build_L6_instance(complete_graph(3), 0, 3, 1, 1)
    with pytest.raises(ValueError):
        build_L6_instance(clique_path(6, 2), 0, 3, 0, 1)


def test_swapped_pair_is_a_violation():
    inst = build_L2_instance(path_graph(4), 0, 2, 1, 1)
    swapped = RotationInstance(inst.lemma, inst.g_prime, inst.g, inst.labels, inst.params)
    assert not verify_rotation(swapped, "increase").ok
    l5 = build_L5_instance(complete_graph(3), 0, 1, (1, 1))
    assert verify_rotation(l5, "increase").violations


def test_subgraph_search():
    assert contains_subgraph(cycle_graph(6), path_graph(4))
    assert not contains_subgraph(path_graph(5), cycle_graph(3))
    assert not contains_subgraph(path_graph(3), path_graph(3), forbidden=1 << 0)


def test_host_catalog_has_four_hosts():
    for k in (2, 3):
        assert len(host_catalog(k)) == 4


def test_rotation_grid():
    rep = rotation_grid()
    assert rep.passed
    assert rep.graphs_tested >= 20
    assert sum(rep.data["per_lemma"].values()) == rep.graphs_tested
    assert min(i["margin"] for i in rep.data["instances"]) > 1e-9
    assert all(v > 0 for v in rep.data["per_lemma"].values())
