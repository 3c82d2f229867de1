import pytest

from zdrlab.families import (
    complete,
    complete_bipartite,
    cycle,
    generate_family,
    path,
    star,
)
from zdrlab.graphs import build_zdgraph, graph_from_edges
from zdrlab.rings import build_ring
from zdrlab.solver import (
    Budget,
    BudgetExceededError,
    DisconnectedGraphError,
    domination_number,
    dominant_metric_dimension,
    is_dominating,
    is_resolving,
    metric_dimension,
    solve_dimensions,
    twin_classes,
)

import oracles


def test_is_dominating_examples():
    p3 = generate_family(path(3))
    assert is_dominating(p3, [1])
    assert not is_dominating(p3, [0])
    assert is_dominating(generate_family(complete(5)), [3])
    assert is_dominating(p3, [0, 1, 2])
    assert not is_dominating(p3, [])


def test_is_resolving_examples():
    p3 = generate_family(path(3))
    assert is_resolving(p3, [0])
    assert not is_resolving(p3, [1])
    k4 = generate_family(complete(4))
    assert is_resolving(k4, [0, 1, 2])
    assert not is_resolving(k4, [0, 1])


def test_predicates_validate_range():
    p3 = generate_family(path(3))
    with pytest.raises(ValueError):
        is_dominating(p3, [3])
    with pytest.raises(ValueError):
        is_resolving(p3, [-1])


def test_twin_classes():
    sizes = sorted(len(c) for c in twin_classes(generate_family(complete_bipartite(2, 4))).classes)
    assert sizes == [2, 4]
    assert len(twin_classes(generate_family(path(4))).classes) == 4
    assert len(twin_classes(generate_family(complete(5))).classes) == 1
    part = twin_classes(generate_family(star(6)))
    assert sorted(len(c) for c in part.classes) == [1, 5]
    assert part.lower_bound() == 4


def test_twin_classes_partition_covers():
    for spec in ["Zn:30", "cat:cvA1", "Zni:5"]:
        g = build_zdgraph(build_ring(spec))
        part = twin_classes(g)
        seen = sorted(v for cls in part.classes for v in cls)
        assert seen == list(range(g.order))


def test_domination_examples():
    assert domination_number(generate_family(path(6))).value == 2
    assert domination_number(generate_family(complete_bipartite(3, 3))).value == 2
    single = generate_family(path(1))
    assert domination_number(single).value == 1


def test_metric_dimension_examples():
    assert metric_dimension(generate_family(path(7))).value == 1
    assert metric_dimension(generate_family(complete(6))).value == 5
    assert metric_dimension(generate_family(complete_bipartite(2, 4))).value == 4
    assert metric_dimension(generate_family(path(1))).value == 0


def test_ddim_examples():
    assert dominant_metric_dimension(build_zdgraph(build_ring("Zn:9"))).value == 1
    assert dominant_metric_dimension(build_zdgraph(build_ring("Zn:4"))).value == 0
    assert dominant_metric_dimension(build_zdgraph(build_ring("Zn:25"))).value == 3


def test_ddim_p3_is_two():
    # no single vertex both resolves and dominates a 3-vertex path:
    # an endpoint resolves but leaves the far endpoint undominated, the
    # center dominates but gives both endpoints the same distance vector
    p3 = generate_family(path(3))
    res = dominant_metric_dimension(p3)
    assert res.value == 2
    assert res.witness == (0, 1)
    assert oracles.brute_ddim(p3)[0] == 2


def test_single_vertex_convention():
    single = generate_family(complete(1))
    res = dominant_metric_dimension(single)
    assert res.value == 0 and res.witness == () and res.method == "convention"


def test_witnesses_are_lex_least_and_valid():
    for fid in [path(6), cycle(7), complete_bipartite(2, 3), star(5)]:
        g = generate_family(fid)
        got = domination_number(g)
        assert is_dominating(g, got.witness)
        assert got.witness == oracles.brute_gamma(g)[1]
        got = metric_dimension(g)
        assert is_resolving(g, got.witness)
        assert got.witness == oracles.brute_dim(g)[1]
        got = dominant_metric_dimension(g)
        assert is_resolving(g, got.witness) and is_dominating(g, got.witness)
        assert got.witness == oracles.brute_ddim(g)[1]


def test_method_labels():
    assert metric_dimension(generate_family(complete_bipartite(2, 4))).method == "twin_reduced"
    assert metric_dimension(generate_family(path(4))).method == "exhaustive"
    assert domination_number(generate_family(path(4))).method == "exhaustive"


def test_disconnected_rejected_for_dim_and_ddim():
    g = graph_from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        metric_dimension(g)
    with pytest.raises(DisconnectedGraphError):
        dominant_metric_dimension(g)
    # domination still works on disconnected graphs
    assert domination_number(g).value == 2


def test_empty_graph_rejected():
    g = graph_from_edges(0, [])
    with pytest.raises(ValueError):
        domination_number(g)


def test_resolving_with_sentinel_on_disconnected():
    g = graph_from_edges(4, [(0, 1), (2, 3)])
    # {0, 2} resolves: vectors (0,-1),(1,-1),(-1,0),(-1,1) are distinct
    assert is_resolving(g, [0, 2])
    assert not is_resolving(g, [0])


def test_budget_checks_cap():
    g = generate_family(cycle(16))
    with pytest.raises(BudgetExceededError) as err:
        dominant_metric_dimension(g, Budget(max_checks=10))
    assert err.value.checks == 11


def test_budget_allows_completion():
    g = generate_family(cycle(9))
    res = dominant_metric_dimension(g, Budget(max_checks=10_000_000, max_ms=60_000))
    assert res.value == 3


def test_solve_dimensions_selective():
    g = generate_family(path(5))
    report = solve_dimensions(g, "ddim")
    assert report.gamma is None and report.dim is None
    assert report.ddim.value == 2
    report = solve_dimensions(g, "all")
    assert (report.gamma.value, report.dim.value, report.ddim.value) == (2, 1, 2)
    with pytest.raises(ValueError):
        solve_dimensions(g, "everything")


def test_large_bipartite_twin_reduction():
    g = generate_family(complete_bipartite(8, 48))
    res = metric_dimension(g)
    assert res.value == 54
    assert res.method == "twin_reduced"
    assert res.checks < 100_000
    res = dominant_metric_dimension(g)
    assert res.value == 54
