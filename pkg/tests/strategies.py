from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from longest_intersect.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (e for e, keep in zip(pairs, chosen) if keep))


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    g = draw(graphs(min_n, max_n))
    comps = g.component_masks()
    for a, b in zip(comps, comps[1:]):
        u = draw(st.sampled_from([v for v in range(g.n) if a >> v & 1]))
        v = draw(st.sampled_from([v for v in range(g.n) if b >> v & 1]))
        g = g.add_edge(u, v)
    return g
