"""Named graph families and seeded random k-connected graphs."""

from __future__ import annotations

import random
from itertools import combinations

from .connectivity import is_k_connected
from .graph import Graph, GraphError

FAMILIES = ("complete", "cycle", "path", "complete_bipartite", "petersen", "hypercube")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle graph needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path graph needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides >= 1")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def hypercube(d: int) -> Graph:
    if d < 1:
        raise GraphError("hypercube needs dimension >= 1")
    n = 1 << d
    return Graph.from_edges(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)))


def gen_named(family: str, *params: int) -> Graph:
    builders = {
        "complete": (complete, 1),
        "cycle": (cycle, 1),
        "path": (path, 1),
        "complete_bipartite": (complete_bipartite, 2),
        "petersen": (petersen, 0),
        "hypercube": (hypercube, 1),
    }
    if family not in builders:
        raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    fn, arity = builders[family]
    if len(params) != arity:
        raise GraphError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def gen_random_k_connected(n: int, k: int, seed: int) -> Graph:
    """Random graph with vertex connectivity at least ``k``.

    Vertices are first topped up to degree ``k`` with random partners, then
    uniformly random non-edges are added until the connectivity test passes.
    Uses ``random.Random(seed)``, so the output is fixed for a given triple.
    """
    if not 1 <= k <= n - 1:
        raise GraphError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    rng = random.Random(seed)
    rows = [0] * n
    for v in range(n):
        while rows[v].bit_count() < k:
            candidates = [u for u in range(n) if u != v and not rows[v] >> u & 1]
            u = rng.choice(candidates)
            rows[v] |= 1 << u
            rows[u] |= 1 << v
    g = Graph(n, tuple(rows))
    while not is_k_connected(g, k):
        non_edges = [(u, v) for u, v in combinations(range(n), 2) if not g.has_edge(u, v)]
        g = g.add_edge(*rng.choice(non_edges))
    return g


def gen_random_connected(n: int, p: float, seed: int) -> Graph:
    """G(n, p) sample, patched into a connected graph by linking components in order."""
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    g = Graph.from_edges(n, edges)
    comps = g.component_masks()
    for a, b in zip(comps, comps[1:]):
        u = rng.choice([i for i in range(n) if a >> i & 1])
        v = rng.choice([i for i in range(n) if b >> i & 1])
        g = g.add_edge(u, v)
    return g


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if rng.random() < p))
