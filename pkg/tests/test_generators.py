import pytest

from longest_intersect.connectivity import is_k_connected, vertex_connectivity
from longest_intersect.generators import (complete_bipartite, gen_gnp, gen_named, gen_random_connected,
                                          gen_random_k_connected, hypercube, petersen)
from longest_intersect.graph import GraphError


def test_named_families():
    assert gen_named("complete", 5).edge_count == 10
    assert gen_named("cycle", 6).degrees() == [2] * 6
    assert gen_named("path", 4).edge_count == 3
    assert complete_bipartite(2, 3).edge_count == 6
    assert hypercube(3).edge_count == 12
    p = petersen()
    assert p.n == 10 and p.edge_count == 15 and set(p.degrees()) == {3}


@pytest.mark.parametrize("family,params", [("cycle", (2,)), ("nope", ()), ("petersen", (3,)),
                                           ("complete", ())])
def test_bad_named_specs(family, params):
    with pytest.raises(GraphError):
        gen_named(family, *params)


@pytest.mark.parametrize("seed", range(20))
def test_random_k_connected(seed):
    n, k = 6 + seed % 6, 1 + seed % 4
    g = gen_random_k_connected(n, k, seed)
    assert g.n == n and is_k_connected(g, k)
    assert g == gen_random_k_connected(n, k, seed)


def test_random_k_connected_rejects_impossible():
    with pytest.raises(GraphError):
        gen_random_k_connected(4, 4, 0)


@pytest.mark.parametrize("seed", range(10))
def test_random_connected(seed):
    g = gen_random_connected(9, 0.15, seed)
    assert g.is_connected() and vertex_connectivity(g) >= 1
    assert g == gen_random_connected(9, 0.15, seed)


def test_gnp_extremes():
    assert gen_gnp(6, 0.0, 1).edge_count == 0
    assert gen_gnp(6, 1.0, 1).edge_count == 15
