import math

import pytest
from hypothesis import given

from longest_intersect.connectivity import is_separator, vertex_connectivity
from longest_intersect.generators import complete, cycle, path, petersen
from longest_intersect.graph import Cycle, Graph, bits
from longest_intersect.intersect import (CHEN_CONSTANT, BoundQuery, NoOptimumError, bound_cycles,
                                         bound_paths, chen_bound, check_conjecture,
                                         check_separator_property, cycle_threshold, pair_stats,
                                         path_threshold)
from longest_intersect.longest import longest_cycle
from oracles import longest_cycles, longest_paths, min_pair_intersection
from strategies import connected_graphs


def test_bounds_examples():
    assert bound_cycles(10, 3) == 0
    assert bound_cycles(100, 16) == 12
    assert bound_cycles(20, 6) == 6
    assert bound_paths(10, 3) == 3
    assert bound_paths(100, 15) == 11
    with pytest.raises(ValueError):
        bound_cycles(5, 1)
    with pytest.raises(ValueError):
        bound_paths(5, 5)


def test_bound_query_keeps_raw_value():
    q = BoundQuery.of(10, 3)
    assert q.cycle_raw == -2 and q.cycle_bound == 0
    assert q.path_raw == 3
    assert BoundQuery.of(4, 1).cycle_bound is None


def test_chen_constant():
    assert 0.2614 <= CHEN_CONSTANT <= 0.2616
    assert chen_bound(1) == CHEN_CONSTANT
    assert math.isclose(chen_bound(32), CHEN_CONSTANT * 8)


def test_thresholds():
    for n in range(3, 80):
        for k in range(2, n):
            assert (bound_cycles(n, k) == k) == (k >= cycle_threshold(n))
            assert (bound_paths(n, k) == k) == (k >= path_threshold(n))


def test_petersen_pairs():
    g = petersen()
    cs = pair_stats(g, "cycle")
    assert (cs.optimum_length, cs.optimum_count, cs.min_intersection) == (9, 20, 8)
    ps = pair_stats(g, "path")
    assert ps.min_intersection == 10 and ps.optimum_count == 120
    a, b = cs.witness_pair
    assert len(set(a.vertices) & set(b.vertices)) == 8


def test_unique_cycle_reports_its_size():
    s = pair_stats(cycle(6), "cycle")
    assert s.min_intersection == 6 and s.distinct_min is None


def test_no_cycle_raises():
    with pytest.raises(NoOptimumError):
        pair_stats(path(4), "cycle")


@given(connected_graphs(min_n=2, max_n=7))
def test_pair_min_matches_brute_force(g):
    _, paths = longest_paths(g)
    assert pair_stats(g, "path").min_intersection == min_pair_intersection(paths)
    circ, cycles = longest_cycles(g)
    if circ:
        assert pair_stats(g, "cycle").min_intersection == min_pair_intersection(cycles)


def test_check_conjecture():
    assert check_conjecture(cycle(6), "cycle", 6).status == "holds"
    assert check_conjecture(cycle(6), "cycle", 7).status == "violated"
    assert check_conjecture(complete(5), "cycle", 3, cap=2).status == "holds"


def test_truncation_is_inconclusive():
    g = Graph.from_edges(25, [(i, (i + 1) % 25) for i in range(25)] + [(0, 12), (3, 17)])
    v = check_conjecture(g, "path", 0, cap=2)
    assert v.status == "inconclusive"


def test_separator_rules():
    g = petersen()
    cycles = longest_cycle(g).witnesses
    C = cycles[0]
    assert check_separator_property(g, C, C).status == "not-applicable"
    k6 = complete(6)
    h = longest_cycle(k6, cap=2).witnesses
    assert check_separator_property(k6, h[0], h[1]).status == "not-applicable"
    with pytest.raises(ValueError):
        check_separator_property(g, C, Cycle.in_graph(g, [0, 1, 2, 3, 4]))


def test_separator_agrees_with_direct_check_on_petersen():
    g = petersen()
    cycles = longest_cycle(g).witnesses
    for C in cycles:
        for D in cycles:
            v = check_separator_property(g, C, D)
            if C.mask == D.mask or C.mask | D.mask == g.all_mask:
                assert v.status == "not-applicable"
            else:
                assert (v.status == "holds") == is_separator(g, bits(C.mask & D.mask))


def test_separator_same_vertex_set_not_applicable():
    # two distinct 6-cycles on {0,...,6} minus 3; vertex 3 hangs off the rest
    from longest_intersect.graph6 import parse_graph6
    g = parse_graph6("F?~v_")
    C = Cycle.in_graph(g, [0, 4, 1, 5, 2, 6])
    D = Cycle.in_graph(g, [0, 4, 1, 6, 2, 5])
    assert vertex_connectivity(g) == 3 and C != D and C.mask == D.mask
    assert check_separator_property(g, C, D).status == "not-applicable"
