"""End-to-end checks that the python module exposes the library faithfully.

The heavy property testing lives in the C++ suites; here we only make sure
the bindings hand values through unharmed on small instances.
"""
import random

import pytest

import maxekpp as mk


def tiny():
    return mk.WeightedGraph(
        4, [(1, 2, 10.0), (1, 3, 5.0), (2, 3, 20.0), (3, 4, 1.0)]
    )


def random_graph(seed, n, density=0.5, lo=-9, hi=9):
    rng = random.Random(seed)
    edges = [
        (i, j, float(rng.randint(lo, hi)))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < density
    ]
    return mk.WeightedGraph(n, edges)


def test_graph_surface():
    g = tiny()
    assert g.node_count == 4
    assert g.edge_count == 4
    assert g.adjacent(2, 3) and not g.adjacent(1, 4)
    assert g.total_edge_weight() == 36.0
    assert g.density() == pytest.approx(4 / 6)
    assert g.complement_edges() == [(1, 4), (2, 4)]
    assert g.with_unit_weights().total_edge_weight() == 4.0


def test_parsing_matches_constructor():
    parsed = mk.parse_weighted_edge_list("4\n1 2 10\n1 3 5\n2 3 20\n3 4 1\n")
    assert parsed.edges() == tiny().edges()
    dimacs = mk.parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n")
    assert dimacs.node_count == 3 and dimacs.edge_count == 2


def test_solver_agrees_with_oracle():
    for seed in range(5):
        g = random_graph(seed, 6)
        for k in (1, 2, 3):
            got = mk.solve_exact(g, k=k)
            want = mk.brute_force_optimum(g, k=k)
            assert got.status == mk.SolveStatus.OPTIMAL
            assert got.incumbent_value == want.incumbent_value
            assert got.partition.labels == want.partition.labels


def test_side_constraints_and_infeasibility():
    g = tiny()
    capped = mk.solve_exact(g, k=1, ub=1.0)
    assert capped.incumbent_value == 0.0  # singletons only
    assert mk.solve_exact(g, k=1, lb=13.0).status == mk.SolveStatus.INFEASIBLE
    # Node 4 only reaches node 3, so one component needs k = 3.
    assert (
        mk.solve_exact(g, k=2, max_components=1).status
        == mk.SolveStatus.INFEASIBLE
    )
    limited = mk.solve_exact(g, k=3, max_components=1)
    assert limited.status == mk.SolveStatus.OPTIMAL
    assert limited.incumbent_value == 36.0
    assert limited.partition.component_count() == 1


def test_kplex_semantics():
    g = tiny()
    assert mk.is_kplex(g, [1, 2, 3], 1)
    assert not mk.is_kplex(g, [1, 2, 3, 4], 2)
    assert mk.is_kplex(g, [1, 2, 3, 4], 3)
    assert mk.prop1_applies(g, 3) and not mk.prop1_applies(g, 1)
    feasible, problems = mk.validate_partition(g, mk.Partition([1, 1, 1, 2]), 1)
    assert feasible and problems == []
    feasible, problems = mk.validate_partition(g, mk.Partition([1, 1, 1, 1]), 1)
    assert not feasible and problems


def test_models_enumerate_and_export():
    g = tiny()
    model = mk.build_fks(g, 2)
    assert model.variable_count == 6  # 4 edges + 2 complement pairs
    solutions = mk.enumerate_model_solutions(model)
    best = max(
        mk.partition_weight(g, mk.assignment_to_partition(model, a))
        for a in solutions
    )
    assert best == mk.solve_exact(g, k=2).incumbent_value
    text = mk.export_lp(model)
    assert text == mk.export_lp(model)
    assert text.startswith("\\ fks model, n=4, k=2, reduced\n")
    assert "Binary" in text and "x_1_2" in text

    capped = mk.add_component_limit(mk.build_f1s(g), g, 2)
    assert any(v.name().startswith("z_") for v in capped.variables)


def test_pullan_weighting():
    g = tiny().with_pullan_weights()
    # ((i + j) mod 200) + 1 on 1-based ids
    assert [w for (_, _, w) in g.edges()] == [4.0, 5.0, 6.0, 8.0]
