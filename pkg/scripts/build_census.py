#!/usr/bin/env python3
"""Build the graph6 census of connected graphs up to isomorphism.

Every graph on n vertices is some graph on n-1 vertices plus one vertex, so
we extend all (connected or not) graphs level by level and keep one
representative per isomorphism class. Isomorphism is settled with networkx:
WL hashes bucket the candidates, VF2 decides within a bucket.

    python scripts/build_census.py 8 > src/longest_intersect/data/connected_3_8.g6
"""

from __future__ import annotations

import argparse
import sys
from collections import defaultdict

import networkx as nx

from longest_intersect.graph import Graph, bits
from longest_intersect.graph6 import emit_graph6


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def all_graphs(n_max: int) -> dict[int, list[Graph]]:
    levels = {1: [Graph.empty(1)]}
    for n in range(2, n_max + 1):
        buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
        reps: list[Graph] = []
        for base in levels[n - 1]:
            for nbrs in range(1 << (n - 1)):
                rows = [row | ((nbrs >> v & 1) << (n - 1)) for v, row in enumerate(base.adj)]
                g = Graph(n, tuple(rows) + (nbrs,))
                h = _nx(g)
                key = (tuple(sorted(g.degrees())), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                if any(nx.is_isomorphic(h, other) for other in buckets[key]):
                    continue
                buckets[key].append(h)
                reps.append(g)
        levels[n] = reps
        print(f"n={n}: {len(reps)} graphs", file=sys.stderr)
    return levels


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n_max", type=int)
    ap.add_argument("--n-min", type=int, default=3)
    args = ap.parse_args()
    levels = all_graphs(args.n_max)
    for n in range(args.n_min, args.n_max + 1):
        lines = sorted(emit_graph6(g) for g in levels[n] if g.is_connected())
        print(f"n={n}: {len(lines)} connected", file=sys.stderr)
        for line in lines:
            print(line)


if __name__ == "__main__":
    main()
