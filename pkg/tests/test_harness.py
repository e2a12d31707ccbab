import json

import pytest

from rainbowdom.graph import Graph
from rainbowdom.harness import (
    CertificationPlan,
    CertificationReport,
    check_cograph_cert,
    default_plan,
    enumerate_cographs,
    enumerate_interval_models,
    enumerate_p4sparse_trees,
    enumerate_rooted_forests,
    graphs_isomorphic,
    run_plan,
    sweep_global_invariants,
)
from rainbowdom.generators import generate
import random


def test_cograph_counts_match_published_sequence():
    by_n = {}
    for t, g in enumerate_cographs(7):
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert [by_n[i] for i in range(1, 8)] == [1, 2, 4, 10, 24, 66, 180]


def test_forest_counts_match_published_sequence():
    by_n = {}
    for m in enumerate_rooted_forests(7):
        by_n[m.n] = by_n.get(m.n, 0) + 1
    assert [by_n[i] for i in range(1, 8)] == [1, 2, 4, 9, 20, 48, 115]


def test_interval_counts_match_published_sequence():
    by_n = {}
    for g, m in enumerate_interval_models(6):
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert [by_n[i] for i in range(1, 7)] == [1, 2, 4, 10, 27, 92]


def test_p4sparse_trees_cover_p4():
    trees = enumerate_p4sparse_trees(4)
    graphs = [g for _t, g in trees if g.n == 4]
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert any(graphs_isomorphic(g, p4) for g in graphs)


def test_isomorphism_checker():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    c4b = Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert graphs_isomorphic(c4, c4b)
    assert not graphs_isomorphic(c4, p4)


def test_sweep_global_invariants_ok(c6, gap12):
    ok, detail = sweep_global_invariants([c6, Graph(1)], (1, 2, 3), cap=36)
    assert ok, detail
    ok, detail = sweep_global_invariants([gap12], (3,), cap=40)
    assert ok, detail


def test_empty_plan():
    report = run_plan(CertificationPlan(0, ()))
    assert report.all_passed and not report.results


def test_unknown_check_rejected():
    with pytest.raises(KeyError):
        run_plan(CertificationPlan(0, (("no_such_check", {}),)))


def test_report_determinism_and_roundtrip():
    plan = default_plan("quick", seed=7)
    plan2 = CertificationPlan.from_json(plan.to_json())
    assert plan2 == plan
    r1 = run_plan(plan)
    r2 = run_plan(plan, workers=3)
    assert r1.to_json() == r2.to_json()
    assert r1.all_passed
    doc = json.loads(r1.to_json())
    assert doc["all_passed"] is True


def test_mutation_is_caught():
    """A deliberately broken solver must produce a counterexample."""

    def broken_rainbow(tree, k):
        from rainbowdom.cograph import rainbow_cograph

        v, w = rainbow_cograph(tree, k)
        # corrupt the value on joins of two multi-vertex parts
        if tree.kind[tree.root] == "J" and tree.n_leaves >= 4:
            return v + 1, w
        return v, w

    rng = random.Random(0)
    result = check_cograph_cert(
        {"max_leaves": 5, "ks": (2,)}, rng, rainbow_solver=broken_rainbow
    )
    assert not result.passed
    assert result.counterexample is not None
    assert "cotree=" in result.counterexample
