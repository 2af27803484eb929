import random

import pytest
from hypothesis import given, strategies as st

from longest_intersect.connectivity import (FanError, FlowNetwork, MengerRefusal, PathSystem, fan,
                                            is_k_connected, is_separator, local_connectivity,
                                            menger_paths, vertex_connectivity)
from longest_intersect.generators import (complete, complete_bipartite, cycle, gen_random_k_connected,
                                          hypercube, path, petersen)
from longest_intersect.graph import Graph, Path
from oracles import brute_connectivity
from strategies import graphs


def test_flow_network_small():
    net = FlowNetwork(4)
    for u, v in [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)]:
        net.add_arc(u, v)
    assert net.max_flow(0, 3) == 2


@pytest.mark.parametrize("g,kappa", [
    (complete(5), 4), (cycle(7), 2), (path(5), 1), (petersen(), 3), (hypercube(3), 3),
    (complete_bipartite(3, 4), 3), (Graph.empty(3), 0), (Graph.empty(1), 0),
])
def test_known_connectivity(g, kappa):
    assert vertex_connectivity(g) == kappa


@given(graphs(max_n=9))
def test_connectivity_matches_brute_force(g):
    assert vertex_connectivity(g) == brute_connectivity(g)


@given(graphs(min_n=1, max_n=8), st.integers(0, 8))
def test_is_k_connected_agrees(g, k):
    assert is_k_connected(g, k) == (vertex_connectivity(g) >= k if k > 0 else True)


def test_local_connectivity_petersen():
    g = petersen()
    assert local_connectivity(g, 0, 7) == 3
    assert local_connectivity(g, 0, 7, limit=2) == 2


def test_menger_paths_petersen():
    g = petersen()
    paths = menger_paths(g, 0, 7, 3)
    assert len(paths) == 3
    inner = [set(p.vertices[1:-1]) for p in paths]
    assert all(not (a & b) for i, a in enumerate(inner) for b in inner[i + 1:])
    assert all(p.ends == (0, 7) for p in paths)


def test_menger_refusal_gives_separator():
    # two triangles joined at vertex 2
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    with pytest.raises(MengerRefusal) as err:
        menger_paths(g, 0, 4, 2)
    assert err.value.found == 1
    assert err.value.separator == frozenset({2})
    assert is_separator(g, err.value.separator)


@given(graphs(min_n=2, max_n=8), st.data())
def test_menger_count_is_local_connectivity(g, data):
    u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    lam = local_connectivity(g, u, v)
    if lam:
        assert len(menger_paths(g, u, v, lam)) == lam
    with pytest.raises(MengerRefusal):
        menger_paths(g, u, v, lam + 1)


def test_fan_petersen():
    g = petersen()
    system = fan(g, 0, [6, 7, 8, 9], 3)
    assert len(system) == 3 and not system.violations(g)
    assert set(system.ends) <= {6, 7, 8, 9}


def test_fan_errors():
    g = cycle(6)
    with pytest.raises(FanError):
        fan(g, 0, [0, 3], 2)
    with pytest.raises(FanError):
        fan(g, 0, [3], 2)
    with pytest.raises(FanError):
        fan(path(4), 0, [2, 3], 2)


def test_path_system_violations_detected():
    g = cycle(6)
    bad = PathSystem(0, frozenset({2, 4}), (Path((0, 1, 2)), Path((0, 1, 2, 3, 4))))
    problems = bad.violations(g)
    assert any("internal vertex in the target set" in p for p in problems)
    assert any("meet" in p for p in problems)


@pytest.mark.parametrize("seed", range(25))
def test_fan_random(seed):
    rng = random.Random(seed)
    n = rng.randint(5, 11)
    k = rng.randint(1, min(4, n - 2))
    g = gen_random_k_connected(n, k, seed)
    v = rng.randrange(n)
    S = rng.sample([x for x in range(n) if x != v], rng.randint(k, n - 1))
    system = fan(g, v, S, k)
    assert len(system) == k and not system.violations(g)


def test_is_separator():
    g = cycle(6)
    assert is_separator(g, [0, 3])
    assert not is_separator(g, [0, 1])
    with pytest.raises(ValueError):
        is_separator(g, range(6))
