"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from itertools import combinations

from longest_intersect.graph import Graph


def brute_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects g (n - 1 for complete graphs)."""
    n = g.n
    if n <= 1:
        return 0
    for size in range(n - 1):
        for S in combinations(range(n), size):
            rest = [v for v in range(n) if v not in S]
            mask = sum(1 << v for v in rest)
            if len(g.component_masks(mask)) >= 2:
                return size
    return n - 1


def simple_paths(g: Graph) -> list[tuple[int, ...]]:
    """Every simple path, each undirected path once (as min(seq, reversed))."""
    out = set()

    def dfs(seq: list[int]) -> None:
        seq_t = tuple(seq)
        out.add(min(seq_t, seq_t[::-1]))
        for u in g.neighbors(seq[-1]):
            if u not in seq:
                seq.append(u)
                dfs(seq)
                seq.pop()

    for v in range(g.n):
        dfs([v])
    return sorted(out)


def simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle as a canonical tuple (smallest vertex first, smaller neighbour next)."""
    out = set()

    def dfs(start: int, seq: list[int]) -> None:
        for u in g.neighbors(seq[-1]):
            if u == start and len(seq) >= 3:
                if seq[1] < seq[-1]:
                    out.add(tuple(seq))
            elif u > start and u not in seq:
                seq.append(u)
                dfs(start, seq)
                seq.pop()

    for s in range(g.n):
        dfs(s, [s])
    return sorted(out)


def longest_paths(g: Graph) -> tuple[int, list[tuple[int, ...]]]:
    ps = simple_paths(g)
    best = max(len(p) for p in ps) - 1
    return best, [p for p in ps if len(p) - 1 == best]


def longest_cycles(g: Graph) -> tuple[int, list[tuple[int, ...]]]:
    cs = simple_cycles(g)
    if not cs:
        return 0, []
    best = max(len(c) for c in cs)
    return best, [c for c in cs if len(c) == best]


def min_pair_intersection(seqs: list[tuple[int, ...]]) -> int:
    """Minimum |V(A) & V(B)| over all pairs, identical pairs included."""
    sets = [set(s) for s in seqs]
    return min(len(a & b) for a in sets for b in sets)
