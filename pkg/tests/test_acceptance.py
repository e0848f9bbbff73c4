"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion."""

import json
import math
import time
from contextlib import contextmanager

import networkx as nx
import pytest

import frozen
import oracle
from specex.cli import RunConfig, execute
from specex.combinat import independence_number
from specex.enumeration import connected_graphs, family_T
from specex.extremal import (
    bv_grid,
    check_lambda_floor,
    check_T1,
    innu_grid,
    limit_trend,
    rotation_grid,
    search_extremal,
    t4_grid,
)
from specex.extremal.checks import check_T4
from specex.graphcore import (
    Graph,
    clique_path,
    clique_star,
    complete_graph,
    cycle_graph,
    graph6_decode,
    is_isomorphic,
    turan_union,
)
from specex.spectral import char_poly_exact, compare_largest_roots, spectral_radius

DESK = [(4, 2), (6, 2), (6, 3), (8, 2), (8, 4)]
PAW = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@contextmanager
def criterion(log, number: int, title: str, limit: float):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        took = time.perf_counter() - start
        ok = ok and took < limit
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({took:.2f}s, limit {limit:g}s)"
        log.append(line)
        print(line)
    assert took < limit, f"criterion {number} took {took:.2f}s (limit {limit:g}s)"


def _same(code_a: str, code_b: str) -> bool:
    return nx.is_isomorphic(nx.from_graph6_bytes(code_a.encode()), nx.from_graph6_bytes(code_b.encode()))


def test_criterion_01_construction_sanity(criterion_log):
    with criterion(criterion_log, 1, "complete graph radii and family independence numbers", 1.0):
        for k in range(2, 13):
            assert abs(spectral_radius(complete_graph(k)).lam - (k - 1)) <= 1e-10
        checked = 0
        for n in range(4, 13):
            for alpha in range(2, n // 2 + 1):
                if n % alpha == 0:
                    assert independence_number(clique_path(n, alpha)) == alpha
                    assert independence_number(clique_star(n, alpha)) == alpha
                    checked += 1
        assert checked == 12
        for n in range(2, 13):
            assert independence_number(clique_path(n, 1)) == 1


def test_criterion_02_limit_sandwich(criterion_log):
    with criterion(criterion_log, 2, "clique path sandwich and shrinking width", 10.0):
        for alpha in (2, 3):
            rep = limit_trend(alpha, range(2, 13))
            assert rep.passed and rep.graphs_tested == 11
            rows = rep.data["rows"]
            for row in rows:
                assert row["lower"] <= row["ratio"] < row["upper"]
            widths = [r["upper"] - r["lower"] for r in rows]
            assert all(b < a for a, b in zip(widths, widths[1:]))
            lower_gaps = [abs(r["lower"] - 1 / alpha) for r in rows]
            assert all(b < a for a, b in zip(lower_gaps, lower_gaps[1:]))
            assert abs(rows[-1]["ratio"] - 1 / alpha) < abs(rows[0]["ratio"] - 1 / alpha)


def test_criterion_03_tree_family_extremes(criterion_log):
    with criterion(criterion_log, 3, "tree-blowup minimizer is clique path, maximizer clique star", 30.0):
        for n, alpha in DESK:
            members = list(family_T(n, alpha))
            polys = [char_poly_exact(g) for g in members]
            for objective, builder, sign in (("min", clique_path, -1), ("max", clique_star, 1)):
                rep = search_extremal(n, alpha, objective, "T")
                assert rep.unique and rep.matches_prediction and not rep.cospectral_tie
                best = graph6_decode(rep.attainers[0])
                assert is_isomorphic(best, builder(n, alpha))
                p_best = char_poly_exact(best)
                for g, p in zip(members, polys):
                    if is_isomorphic(g, best):
                        continue
                    assert compare_largest_roots(p_best, p) == sign


def test_criterion_04_connected_minimizers_match_oracle(criterion_log):
    with criterion(criterion_log, 4, "connected minimizers equal the brute-force oracle", 300.0):
        for pair in DESK:
            lam, code = frozen.MIN_CONNECTED[pair]
            live_lam, live_codes = oracle.extremal(*pair, "min")
            assert live_codes == [code] and abs(live_lam - lam) <= 1e-12
            rep = search_extremal(*pair, "min", "G")
            assert abs(rep.optimum_lambda - lam) <= 1e-9
            assert rep.unique and _same(rep.attainers[0], code)
            assert is_isomorphic(graph6_decode(rep.attainers[0]), clique_path(*pair))


def test_criterion_05_diamond_scope_finding(criterion_log):
    with criterion(criterion_log, 5, "diamond beats the clique star at (4,2)", 1.0):
        rep = search_extremal(4, 2, "max", "G")
        assert abs(rep.optimum_lambda - (1 + math.sqrt(17)) / 2) <= 1e-9
        diamond = complete_graph(4).remove_edge(0, 1)
        assert rep.unique and is_isomorphic(graph6_decode(rep.attainers[0]), diamond)
        assert rep.matches_prediction is False
        assert rep.witness_counterexample is not None and rep.outside_guaranteed_regime
        assert any("manipulated family" in note for note in rep.notes)


def test_criterion_06_lambda_floor(criterion_log):
    with criterion(criterion_log, 6, "spectral radius floor k-1 with Turan equality class", 300.0):
        for n, alpha in DESK:
            rep = check_lambda_floor(n, alpha)
            assert rep.passed and not rep.violations
            assert len(rep.witnesses) == 1
            assert is_isomorphic(graph6_decode(rep.witnesses[0]), turan_union(n, alpha))
            lam, code = frozen.MIN_ANY[(n, alpha)]
            assert _same(rep.witnesses[0], code) and abs(lam - (n // alpha - 1)) <= 1e-9


def test_criterion_07_inequality_grids(criterion_log):
    with criterion(criterion_log, 7, "clique-count, independent-set and triangle-free edge bounds", 120.0):
        for rep in (bv_grid(7), innu_grid(7), t4_grid(7)):
            assert rep.passed and not rep.violations and rep.graphs_tested > 0
        c5 = check_T4(cycle_graph(5))
        assert c5.data["clause1"]["tight"] and c5.data["clause1"]["edges"] == 5


def test_criterion_08_walk_ratios(criterion_log):
    with criterion(criterion_log, 8, "closed-walk ratios approach squared Perron ratios", 5.0):
        rep = check_T1([PAW, clique_path(6, 2)], s=200, tol=1e-6)
        assert rep.passed and rep.graphs_tested == 2
        for data in rep.data.values():
            assert len(data["pairs"]) > 0
            for _, _, ratio, target in data["pairs"]:
                assert abs(ratio - target) <= 1e-6


def test_criterion_09_rotation_grid(criterion_log):
    with criterion(criterion_log, 9, "edge rotations change the spectral radius strictly", 30.0):
        rep = rotation_grid(ks=(2, 3), ls=(0, 1), ps=(1, 2))
        assert rep.passed and rep.graphs_tested >= 20
        assert all(i["margin"] > 1e-9 for i in rep.data["instances"])
        assert set(rep.data["per_lemma"]) == {"L2", "L5", "L6"}


def test_criterion_10_enumeration_and_determinism(criterion_log):
    with criterion(criterion_log, 10, "connected class counts and byte-identical reports", 60.0):
        for n, expected in ((4, 6), (5, 21), (6, 112)):
            assert oracle.labeled_class_counts(n)[1] == expected
            assert sum(1 for _ in connected_graphs(n)) == expected
        configs = [
            RunConfig(command="search", n=6, alpha=3, objective="min", family="g", jobs=2),
            RunConfig(command="verify", check="floor", n=6, alpha=3, jobs=1),
            RunConfig(command="verify", check="l2", jobs=1),
            RunConfig(command="spectral", graphs=["Bw", "E@U_"]),
        ]
        for cfg in configs:
            first, _ = execute(cfg)
            second, _ = execute(cfg)
            assert first.encode() == second.encode()
            json.loads(first)
