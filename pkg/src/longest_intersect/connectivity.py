"""Vertex connectivity, Menger paths and fans via unit-capacity max-flow.

Each vertex ``x`` is split into ``in(x) = 2x`` and ``out(x) = 2x + 1`` joined
by a capacity-1 arc, which turns vertex-disjointness into arc-disjointness.
Augmenting paths are found by BFS scanning arcs in insertion order, and arcs
are inserted in ascending vertex order, so witnesses are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, Path, bits, to_mask


class FlowNetwork:
    def __init__(self, size: int) -> None:
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, cap: int = 1) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _augment(self, s: int, t: int) -> bool:
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in self.head[x]:
                y = self.to[e]
                if self.cap[e] > 0 and y not in parent:
                    parent[y] = e
                    if y == t:
                        while y != s:
                            e = parent[y]
                            self.cap[e] -= 1
                            self.cap[e ^ 1] += 1
                            y = self.to[e ^ 1]
                        return True
                    queue.append(y)
        return False

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        flow = 0
        while (limit is None or flow < limit) and self._augment(s, t):
            flow += 1
        return flow

    def residual_reach(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for e in self.head[x]:
                if self.cap[e] > 0 and self.to[e] not in seen:
                    seen.add(self.to[e])
                    stack.append(self.to[e])
        return seen

    def carries_flow(self, e: int) -> bool:
        # forward arcs sit at even indices; flow shows up on the paired reverse arc
        return e % 2 == 0 and self.cap[e ^ 1] > 0


def _split_network(g: Graph, blocked: int = 0, extra: int = 0) -> FlowNetwork:
    """Split-vertex network; vertices in ``blocked`` get no in->out arc."""
    net = FlowNetwork(2 * g.n + extra)
    for x in range(g.n):
        if not blocked >> x & 1:
            net.add_arc(2 * x, 2 * x + 1)
    for x in range(g.n):
        for y in bits(g.adj[x]):
            net.add_arc(2 * x + 1, 2 * y)
    return net


def _decompose(g: Graph, net: FlowNetwork, source: int, stop) -> list[list[int]]:
    """Walk unit flow out of ``out(source)`` until ``stop(node)`` says the path ended."""
    paths = []
    used: set[int] = set()
    for e0 in net.head[2 * source + 1]:
        if not net.carries_flow(e0) or e0 in used:
            continue
        used.add(e0)
        seq = [source]
        node = net.to[e0]
        while True:
            x = node // 2
            seq.append(x)
            if stop(node):
                break
            # in(x) -> out(x) -> in(y)
            node = 2 * x + 1
            nxt = next(e for e in net.head[node] if net.carries_flow(e) and e not in used)
            used.add(nxt)
            node = net.to[nxt]
        paths.append(seq)
    return paths


def local_connectivity(g: Graph, u: int, v: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint u-v paths (capped at ``limit``)."""
    net = _split_network(g)
    return net.max_flow(2 * u + 1, 2 * v, limit)


def vertex_connectivity(g: Graph) -> int:
    if g.n <= 1 or not g.is_connected():
        return 0
    if g.is_complete():
        return g.n - 1
    degs = g.degrees()
    delta = min(degs)
    v = degs.index(delta)
    kappa = delta
    for w in range(g.n):
        if w != v and not g.has_edge(v, w):
            kappa = min(kappa, local_connectivity(g, v, w, kappa))
    for x, y in combinations(g.neighbors(v), 2):
        if not g.has_edge(x, y):
            kappa = min(kappa, local_connectivity(g, x, y, kappa))
    return kappa


def is_k_connected(g: Graph, k: int) -> bool:
    if k <= 0:
        return g.n > 0
    if g.n <= k or g.min_degree() < k:
        return False
    return vertex_connectivity(g) >= k


class MengerRefusal(Exception):
    """Fewer than ``k`` disjoint paths exist; ``separator`` certifies it for non-adjacent ends."""

    def __init__(self, u: int, v: int, k: int, found: int, separator: frozenset[int] | None) -> None:
        super().__init__(f"only {found} internally disjoint {u}-{v} paths, wanted {k}")
        self.found = found
        self.separator = separator


def menger_paths(g: Graph, u: int, v: int, k: int) -> list[Path]:
    if u == v:
        raise ValueError("menger_paths needs distinct end vertices")
    net = _split_network(g)
    s, t = 2 * u + 1, 2 * v
    found = net.max_flow(s, t, k)
    if found < k:
        separator = None
        if not g.has_edge(u, v):
            reach = net.residual_reach(s)
            separator = frozenset(x for x in range(g.n) if 2 * x in reach and 2 * x + 1 not in reach)
        raise MengerRefusal(u, v, k, found, separator)
    seqs = _decompose(g, net, u, lambda node: node == t)
    paths = [Path.in_graph(g, seq) for seq in seqs]
    _check_disjoint(paths, {u, v})
    return paths


def _check_disjoint(paths: list[Path], allowed: set[int]) -> None:
    seen: set[int] = set()
    for p in paths:
        inner = set(p.vertices) - allowed
        if inner & seen:
            raise AssertionError(f"paths share internal vertices {sorted(inner & seen)}")
        seen |= inner


@dataclass(frozen=True)
class PathSystem:
    """Paths from one source into a target set that pairwise meet only at the source."""

    source: int
    targets: frozenset[int]
    paths: tuple[Path, ...]

    @property
    def ends(self) -> list[int]:
        return [p.vertices[-1] for p in self.paths]

    def __len__(self) -> int:
        return len(self.paths)

    def end_map(self) -> dict[int, Path]:
        return {p.vertices[-1]: p for p in self.paths}

    def violations(self, g: Graph) -> list[str]:
        problems = []
        for p in self.paths:
            try:
                Path.in_graph(g, p.vertices)
            except ValueError as exc:
                problems.append(f"invalid path {p.vertices}: {exc}")
            if p.vertices[0] != self.source:
                problems.append(f"path {p.vertices} does not start at {self.source}")
            if p.vertices[-1] not in self.targets:
                problems.append(f"path {p.vertices} does not end in the target set")
            if any(x in self.targets for x in p.vertices[:-1]):
                problems.append(f"path {p.vertices} has an internal vertex in the target set")
        for a, b in combinations(self.paths, 2):
            common = set(a.vertices) & set(b.vertices)
            if common != {self.source}:
                problems.append(f"paths {a.vertices} and {b.vertices} meet in {sorted(common)}")
        return problems


class FanError(ValueError):
    pass


def fan(g: Graph, v: int, targets: Iterable[int], k: int, check_connectivity: bool = True) -> PathSystem:
    """``k`` paths from ``v`` to distinct vertices of ``targets``, meeting only at ``v``."""
    S = frozenset(targets)
    if v in S:
        raise FanError(f"source {v} lies in the target set")
    if len(S) < k:
        raise FanError(f"target set has {len(S)} < k={k} vertices")
    if check_connectivity and not is_k_connected(g, k):
        raise FanError(f"graph is not {k}-connected")
    sink = 2 * g.n
    smask = to_mask(S)
    # targets have no in->out arc, so no path runs through one
    net = _split_network(g, blocked=smask, extra=1)
    for x in sorted(S):
        net.add_arc(2 * x, sink)
    found = net.max_flow(2 * v + 1, sink, k)
    if found < k:
        raise FanError(f"only {found} disjoint {v}-S paths exist, wanted {k}")
    seqs = _decompose(g, net, v, lambda node: node % 2 == 0 and smask >> (node // 2) & 1)
    system = PathSystem(v, S, tuple(Path.in_graph(g, seq) for seq in seqs))
    assert len(system) == k and not system.violations(g)
    return system


def is_separator(g: Graph, S: Iterable[int]) -> bool:
    drop = to_mask(S)
    if drop & g.all_mask == g.all_mask:
        raise ValueError("separator must leave at least one vertex")
    return len(g.component_masks(g.all_mask & ~drop)) >= 2
