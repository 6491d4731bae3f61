import math

import pytest

from graphenergy.canon import are_isomorphic
from graphenergy.graph6 import decode, encode
from graphenergy.graphs import (
    Graph,
    complement,
    complete,
    cycle,
    path,
    star,
    union_of_cycles,
)
from graphenergy.search import (
    Budget,
    SearchSpec,
    bitmask_class_count,
    bitmask_classes,
    bitmask_extremal_energy,
    cycle_partition_spectrum,
    enumerate_graphs,
    extremal_energy,
    partitions_min_part,
    realize_spectrum,
)
from graphenergy.spectra import PHI, eigenvalues, spectrum_matches

KNOWN_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_enumeration_matches_oracle_counts():
    for n in range(1, 7):
        got = sum(1 for _ in enumerate_graphs(SearchSpec(n=n)))
        assert got == KNOWN_CLASS_COUNTS[n]
        assert bitmask_class_count(n) == KNOWN_CLASS_COUNTS[n]


def test_enumeration_is_isomorph_free_and_deterministic():
    first = [encode(g) for g in enumerate_graphs(SearchSpec(n=5))]
    second = [encode(g) for g in enumerate_graphs(SearchSpec(n=5))]
    assert first == second
    graphs = list(enumerate_graphs(SearchSpec(n=5)))
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert not are_isomorphic(graphs[i], graphs[j])


def test_oracle_representatives_cover_all_classes():
    reps = bitmask_classes(5)
    assert len(reps) == 34
    enum = list(enumerate_graphs(SearchSpec(n=5)))
    matched = 0
    for rep in reps:
        assert any(are_isomorphic(rep, g) for g in enum)
        matched += 1
    assert matched == 34


def test_single_vertex_class():
    graphs = list(enumerate_graphs(SearchSpec(n=1)))
    assert len(graphs) == 1
    assert graphs[0].n == 1 and graphs[0].m == 0


def test_constrained_enumeration_counts():
    # connected graphs on 5 vertices: 21 of the 34 classes
    connected = list(enumerate_graphs(SearchSpec(n=5, connected=True)))
    assert len(connected) == 21
    # 3-regular graphs on 6 vertices: K_{3,3} and the prism
    cubic = list(enumerate_graphs(SearchSpec(n=6, regular_degree=3)))
    assert len(cubic) == 2
    # trees on 7 and 8 vertices
    assert len(list(enumerate_graphs(SearchSpec(n=7, tree=True)))) == 11
    assert len(list(enumerate_graphs(SearchSpec(n=8, tree=True)))) == 23
    # fixed edge count: all graphs with 5 vertices and 4 edges
    four_edges = list(enumerate_graphs(SearchSpec(n=5, m=4)))
    assert len(four_edges) == 6
    assert all(g.m == 4 for g in four_edges)


def test_tree_paths_agree_with_augmentation():
    # the labeled-tree route (n <= 9) and the augmentation route must agree
    via_prufer = list(enumerate_graphs(SearchSpec(n=8, tree=True)))
    via_aug = list(
        enumerate_graphs(
            SearchSpec(n=8, m=7, connected=True),
        )
    )
    aug_trees = [g for g in via_aug if g.m == 7]
    assert len(via_prufer) == len(aug_trees) == 23


def test_complement_cycles_enumeration():
    graphs = list(enumerate_graphs(SearchSpec(n=18, complement_cycles=True)))
    assert len(graphs) == len(list(partitions_min_part(18, 3)))
    assert all(g.n == 18 and g.m == 135 for g in graphs)
    assert all(set(g.degrees()) == {15} for g in graphs)


def test_partitions_min_part():
    assert list(partitions_min_part(6, 3)) == [(6,), (3, 3)]
    assert list(partitions_min_part(2, 3)) == []
    parts = list(partitions_min_part(18, 3))
    assert (4, 4, 5, 5) not in parts  # descending order convention
    assert (5, 5, 4, 4) in parts
    assert all(sum(p) == 18 for p in parts)
    assert all(min(p) >= 3 for p in parts)


def test_extremal_small_complete_graphs():
    for n in range(2, 7):
        res = extremal_energy(SearchSpec(n=n, objective="max"))
        assert res.exhausted
        assert any(are_isomorphic(f.graph, complete(n)) for f in res.best)


def test_extremal_minimum_is_empty_graph():
    res = extremal_energy(SearchSpec(n=4, objective="min"))
    assert res.exhausted
    assert len(res.best) == 1
    assert res.best[0].graph.m == 0
    assert res.best[0].energy == pytest.approx(0.0, abs=1e-12)


def test_extremal_requires_objective():
    with pytest.raises(ValueError):
        extremal_energy(SearchSpec(n=4))


def test_max_energy_tree_is_path():
    res = extremal_energy(SearchSpec(n=8, tree=True, objective="max"))
    assert res.exhausted
    assert len(res.best) == 1
    assert are_isomorphic(res.best[0].graph, path(8))


def test_min_energy_tree_is_star():
    res = extremal_energy(SearchSpec(n=7, tree=True, objective="min"))
    assert res.exhausted
    assert are_isomorphic(res.best[0].graph, star(6))


def test_budget_exhaustion_is_explicit():
    res = extremal_energy(
        SearchSpec(n=12, objective="max", budget=Budget(max_graphs=2000, max_seconds=60))
    )
    assert not res.exhausted
    assert res.graphs_examined >= 2000


def test_empty_class_is_distinct():
    res = extremal_energy(
        SearchSpec(n=6, m=14, regular_degree=None, objective="max", bipartite=True)
    )
    # bipartite graphs on 6 vertices have at most 9 edges
    assert res.exhausted
    assert res.empty_class
    assert res.best == []


def test_cycle_partition_spectrum_examples():
    s = cycle_partition_spectrum([3] * 6, 18)
    assert spectrum_matches(s, [15.0] + [0.0] * 12 + [-3.0] * 5, 1e-9)

    s = cycle_partition_spectrum([4, 4, 5, 5], 18)
    want = [15.0, 1.0, 1.0] + [PHI - 1] * 4 + [-1.0] * 4 + [-PHI] * 4 + [-3.0] * 3
    assert spectrum_matches(s, want, 1e-9)

    s = cycle_partition_spectrum([5], 5)
    assert spectrum_matches(s, eigenvalues(cycle(5)).values, 1e-9)

    with pytest.raises(ValueError):
        cycle_partition_spectrum([3, 3], 7)
    with pytest.raises(ValueError):
        cycle_partition_spectrum([2, 5], 7)


def test_cycle_partition_spectrum_matches_eigensolve():
    for n in range(12, 19):
        for parts in partitions_min_part(n, 3):
            analytic = cycle_partition_spectrum(parts, n)
            direct = eigenvalues(complement(union_of_cycles(parts)))
            assert spectrum_matches(analytic, direct.values, 1e-9)
            # -3 has multiplicity k exactly when the complement has k+1 parts
            minus3 = sum(1 for v in analytic.values if abs(v + 3.0) < 1e-9)
            assert minus3 == len(parts) - 1


def test_realize_c4():
    res = realize_spectrum(SearchSpec(n=4, m=4, target=(2.0, 0.0, 0.0, -2.0)))
    assert res.exhausted
    assert len(res.best) == 1
    assert are_isomorphic(res.best[0].graph, cycle(4))


def test_realize_fast_fail_on_third_moment():
    target = tuple([6.0] + [1.4415] * 3 + [-1.7208] * 6)
    res = realize_spectrum(SearchSpec(n=10, m=30, target=target, match_tol=1e-3))
    assert res.empty_class
    assert res.exhausted
    assert res.graphs_examined == 0
    assert any("third moment" in r for r in res.fast_fail_reasons)


def test_realize_fast_fail_on_first_moment():
    res = realize_spectrum(SearchSpec(n=3, m=2, target=(1.0, 1.0, 1.0)))
    assert res.empty_class
    assert any("first moment" in r for r in res.fast_fail_reasons)


def test_realize_fast_fail_on_second_moment():
    res = realize_spectrum(SearchSpec(n=3, m=3, target=(1.5, 0.0, -1.5)))
    # sum of squares 4.5 is not an even integer
    assert res.empty_class
    assert any("second moment" in r for r in res.fast_fail_reasons)


def test_realize_fast_fail_never_rejects_actual_spectra(graphs_by_n):
    from graphenergy.search import _moment_fast_fail

    # the cheap certificates must accept the true spectrum of every graph
    for n in range(2, 8):
        for g in graphs_by_n[n]:
            if g.m == 0:
                continue
            target = eigenvalues(g).values
            spec = SearchSpec(n=n, m=g.m, target=target, match_tol=1e-6)
            assert _moment_fast_fail(spec) == []
    # and the full realization pipeline recovers each graph
    for n in range(2, 7):
        for g in graphs_by_n[n]:
            if g.m == 0:
                continue
            target = eigenvalues(g).values
            spec = SearchSpec(n=n, m=g.m, target=target, match_tol=1e-6)
            res = realize_spectrum(spec)
            assert not res.fast_fail_reasons
            assert res.exhausted
            assert any(are_isomorphic(f.graph, g) for f in res.best)


def test_realize_heawood():
    r2 = math.sqrt(2.0)
    target = tuple([3.0] + [r2] * 6 + [-r2] * 6 + [-3.0])
    spec = SearchSpec(
        n=14, bipartite=True, regular_degree=3, target=target, match_tol=1e-6
    )
    res = realize_spectrum(spec)
    assert res.exhausted
    assert len(res.best) == 1
    found = res.best[0]
    direct = eigenvalues(found.graph)
    assert spectrum_matches(direct, target, 1e-6)
    assert found.energy == pytest.approx(6 + 12 * r2, abs=1e-9)


def test_realize_sixteen_vertex_degree_ten_unique():
    target = tuple([10.0] + [2.0] * 5 + [-2.0] * 10)
    spec = SearchSpec(n=16, regular_degree=10, target=target, match_tol=1e-6)
    res = realize_spectrum(spec)
    assert res.exhausted
    assert len(res.best) == 1
    g = res.best[0].graph
    assert set(g.degrees()) == {10}
    assert res.best[0].energy == pytest.approx(40.0, abs=1e-9)


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(n=0)
    with pytest.raises(ValueError):
        SearchSpec(n=5, regular_degree=5)
    with pytest.raises(ValueError):
        SearchSpec(n=5, regular_degree=3)  # odd degree sum
    with pytest.raises(ValueError):
        SearchSpec(n=6, regular_degree=3, m=10)
    with pytest.raises(ValueError):
        SearchSpec(n=6, tree=True, m=6)
    with pytest.raises(ValueError):
        SearchSpec(n=18, complement_cycles=True, m=100)
    with pytest.raises(ValueError):
        SearchSpec(n=4, target=(1.0, -1.0))
    with pytest.raises(ValueError):
        SearchSpec(n=6, tree=True, regular_degree=2)
    with pytest.raises(ValueError):
        SearchSpec(n=6, tree=True, complement_cycles=True)
    with pytest.raises(ValueError):
        Budget(max_graphs=0)


def test_bitmask_extremal_matches_enumerator():
    for n in (4, 5):
        oracle = bitmask_extremal_energy(n, "max")
        enum = extremal_energy(SearchSpec(n=n, objective="max"))
        assert oracle.best[0].energy == pytest.approx(enum.best[0].energy, abs=1e-9)
        assert len(oracle.best) == len(enum.best)
