"""Simple undirected graphs with bitset adjacency, plus validated paths and cycles.

Vertices are ``0..n-1``. Each adjacency row is a Python int used as a bitset,
so set algebra on neighbourhoods is a single machine operation for the small
graphs this package deals with.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# graph6 can encode up to 2**36 - 1 vertices, but the long header form beyond
# 258047 is never useful for exact search.
MAX_VERTICES = 258047


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        full = self.all_mask
        return all(row == full ^ (1 << v) for v, row in enumerate(self.adj))

    def add_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced(self, keep: int) -> tuple[Graph, dict[int, int]]:
        """Subgraph induced by the vertex mask ``keep``, relabelled densely."""
        old = list(bits(keep))
        new_id = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            row = 0
            for u in bits(self.adj[v] & keep):
                row |= 1 << new_id[u]
            rows.append(row)
        return Graph(len(old), tuple(rows)), new_id

    def reach(self, start: int, within: int) -> int:
        """Mask of vertices reachable from ``start`` using only vertices in ``within``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def component_masks(self, within: int | None = None) -> list[int]:
        remaining = self.all_mask if within is None else within
        comps = []
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            comp = self.reach(v, remaining)
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.component_masks()) == 1


def remove_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete ``removed`` from ``g``; returns the induced remainder and the old-to-new id map."""
    drop = 0
    for v in removed:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        drop |= 1 << v
    return g.induced(g.all_mask & ~drop)


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(m)) for m in g.component_masks()]


class PathError(GraphError):
    pass


def _check_walk(g: Graph, seq: Sequence[int], closed: bool) -> None:
    if len(set(seq)) != len(seq):
        seen = set()
        for v in seq:
            if v in seen:
                raise PathError(f"vertex {v} repeated")
            seen.add(v)
    for v in seq:
        if not 0 <= v < g.n:
            raise PathError(f"vertex {v} not in graph")
    pairs = list(zip(seq, seq[1:]))
    if closed:
        pairs.append((seq[-1], seq[0]))
    for u, v in pairs:
        if not g.has_edge(u, v):
            raise PathError(f"{u} and {v} are not adjacent")


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise PathError("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise PathError("path vertices must be distinct")

    @classmethod
    def in_graph(cls, g: Graph, vertices: Iterable[int]) -> Path:
        seq = tuple(vertices)
        if not seq:
            raise PathError("a path has at least one vertex")
        _check_walk(g, seq, closed=False)
        return cls(seq)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in zip(self.vertices, self.vertices[1:]))

    def reversed(self) -> Path:
        return Path(self.vertices[::-1])

    def canonical(self) -> Path:
        rev = self.vertices[::-1]
        return self if self.vertices <= rev else Path(rev)

    def subpath(self, x: int, y: int) -> Path:
        """The piece of this path from ``x`` to ``y``, oriented from ``x``."""
        i, j = self.vertices.index(x), self.vertices.index(y)
        if i <= j:
            return Path(self.vertices[i:j + 1])
        return Path(self.vertices[j:i + 1][::-1])

    def __len__(self) -> int:
        return self.length


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    i = min(range(len(seq)), key=seq.__getitem__)
    rot = tuple(seq[i:]) + tuple(seq[:i])
    if rot[-1] < rot[1]:
        rot = (rot[0],) + rot[:0:-1]
    return rot


@dataclass(frozen=True)
class Cycle:
    """A simple cycle stored in canonical form.

    The smallest vertex comes first and the second entry is its smaller
    neighbour on the cycle, so equal cycles compare equal.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise PathError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise PathError("cycle vertices must be distinct")
        if canonical_cycle(self.vertices) != self.vertices:
            object.__setattr__(self, "vertices", canonical_cycle(self.vertices))

    @classmethod
    def in_graph(cls, g: Graph, vertices: Iterable[int]) -> Cycle:
        seq = tuple(vertices)
        if len(seq) < 3:
            raise PathError("a cycle needs at least 3 vertices")
        _check_walk(g, seq, closed=True)
        return cls(seq)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def edge_set(self) -> frozenset[frozenset[int]]:
        vs = self.vertices
        return frozenset(frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs)))

    def position(self, v: int) -> int:
        return self.vertices.index(v)

    def arc(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices of the arc C[u,v] walking forward (in stored order) from ``u`` to ``v``."""
        vs = self.vertices
        i, j = vs.index(u), vs.index(v)
        if i <= j:
            return vs[i:j + 1]
        return vs[i:] + vs[:j + 1]

    def __len__(self) -> int:
        return self.length
