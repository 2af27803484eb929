"""Exact longest paths and cycles.

Two independent backends:

* ``dp``  -- subset dynamic programming. For every vertex set ``M`` and end
  vertex ``v`` it counts the Hamiltonian paths of ``G[M]`` ending at ``v``
  (and, separately, those starting at the lowest vertex of ``M``, which
  yields the cycles of ``G[M]``). Optima, exact counts and witness
  enumeration with perfect pruning all come out of the same tables.
* ``bnb`` -- depth-first branch and bound; the bound is the current length
  plus the number of unused vertices reachable from the active end.

``auto`` picks ``dp`` up to ``DP_MAX_N`` vertices.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

import numpy as np

from .connectivity import is_k_connected
from .graph import Cycle, Graph, Path, bits
from .verdict import Verdict, holds, not_applicable, violated

Kind = Literal["path", "cycle"]

DP_MAX_N = 18
DEFAULT_CAP = int(os.environ.get("LONGEST_INTERSECT_CAP", "1000000"))


class BudgetExceeded(RuntimeError):
    pass


class Deadline:
    """Cooperative time budget; solvers poll it every few thousand search nodes."""

    def __init__(self, budget_ms: float | None) -> None:
        self.until = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0

    def check(self) -> None:
        if self.until is not None and time.monotonic() > self.until:
            raise BudgetExceeded("time budget exceeded")


NO_DEADLINE = Deadline(None)


@dataclass(frozen=True)
class SolveResult:
    kind: str
    best_length: int
    witnesses: tuple[Path | Cycle, ...]
    truncated: bool
    explored_nodes: int
    # exact number of optima when known (always with dp), else None
    optimum_count: int | None = None


def _backend(g: Graph, backend: str) -> str:
    if backend == "auto":
        return "dp" if g.n <= DP_MAX_N else "bnb"
    if backend not in ("dp", "bnb"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "dp" and g.n > DP_MAX_N:
        raise ValueError(f"dp backend limited to n <= {DP_MAX_N}")
    return backend


# --------------------------------------------------------------------------
# subset dynamic programming
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _layers(n: int) -> tuple[np.ndarray, ...]:
    masks = np.arange(1 << n, dtype=np.int64)
    pop = np.bitwise_count(masks)
    return tuple(masks[pop == p] for p in range(n + 1))


@dataclass(frozen=True)
class _Tables:
    n: int
    path_total: np.ndarray   # undirected Hamiltonian paths of G[M]
    cycle_total: np.ndarray  # Hamiltonian cycles of G[M]
    path_ends: list[int]     # bitmask of v such that G[M] has a Hamiltonian path ending at v


@lru_cache(maxsize=4)
def _tables(g: Graph) -> _Tables:
    n = g.n
    size = 1 << n
    A = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        A[u, v] = A[v, u] = 1
    paths = np.zeros((size, n), dtype=np.int64)
    starts = np.zeros((size, n), dtype=np.int64)
    for v in range(n):
        paths[1 << v, v] = 1
        starts[1 << v, v] = 1
    layers = _layers(n)
    vbits = np.int64(1) << np.arange(n, dtype=np.int64)
    At = A.T[None, :, :]
    for p in range(2, n + 1):
        # one layer at a time; rows are masks, columns the end vertex v
        masks = layers[p][:, None]
        prev = masks ^ vbits
        has_v = (masks & vbits) != 0
        # cycle table counts paths starting at the lowest vertex, which must not be v
        not_low = (masks & (vbits - 1)) != 0
        paths[layers[p]] = (paths[prev] * At).sum(axis=2) * has_v
        starts[layers[p]] = (starts[prev] * At).sum(axis=2) * (has_v & not_low)
    all_masks = np.arange(size, dtype=np.int64)
    pop = np.bitwise_count(all_masks)
    path_total = paths.sum(axis=1)
    path_total = np.where(pop >= 2, path_total // 2, path_total)
    low = np.zeros(size, dtype=np.int64)
    low[1:] = np.log2((all_masks & -all_masks)[1:]).astype(np.int64)
    closing = A[low]
    cycle_total = (starts * closing).sum(axis=1) // 2
    cycle_total[pop < 3] = 0
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    path_ends = ((paths > 0).astype(np.int64) @ weights).tolist()
    return _Tables(n, path_total, cycle_total, path_ends)


def _dp_optima(g: Graph, kind: Kind) -> tuple[int, dict[int, int]]:
    """Best length and {vertex mask: number of optima on exactly that set}."""
    if g.n == 0:
        return 0, {}
    t = _tables(g)
    totals = t.path_total if kind == "path" else t.cycle_total
    nz = np.nonzero(totals)[0]
    if len(nz) == 0:
        return 0, {}
    pop = np.bitwise_count(nz.astype(np.int64))
    top = int(pop.max())
    best = nz[pop == top]
    optima = {int(m): int(totals[m]) for m in best}
    return (top - 1 if kind == "path" else top), optima


def _dp_enumerate(g: Graph, kind: Kind, optima: dict[int, int], cap: int,
                  deadline: Deadline) -> tuple[list, bool, int]:
    ends = _tables(g).path_ends
    out: list = []
    explored = 0
    targets = sorted(optima)

    def feasible(cands: list[int], used: int, v: int) -> list[int]:
        vb = 1 << v
        return [M for M in cands if M & used == used and ends[(M & ~used) | vb] >> v & 1]

    def walk(seq: list[int], used: int, cands: list[int], full: int) -> Iterator[None]:
        nonlocal explored
        explored += 1
        if explored & 4095 == 0:
            deadline.check()
        v = seq[-1]
        if len(seq) == full:
            yield None
            return
        for w in bits(g.adj[v] & ~used):
            if kind == "cycle" and w < seq[0]:
                continue
            nused = used | (1 << w)
            nc = feasible(cands, nused, w)
            if nc:
                seq.append(w)
                yield from walk(seq, nused, nc, full)
                seq.pop()

    if not targets:
        return out, False, explored
    full = max(t.bit_count() for t in targets)
    for s in range(g.n):
        sb = 1 << s
        if kind == "path":
            cands = [M for M in targets if M & sb]
        else:
            cands = [M for M in targets if M & -M == sb]
        cands = feasible(cands, sb, s)
        if not cands:
            continue
        seq = [s]
        for _ in walk(seq, sb, cands, full):
            if kind == "path":
                if len(seq) > 1 and seq[0] > seq[-1]:
                    continue
                out.append(Path(tuple(seq)))
            else:
                if not g.has_edge(seq[-1], s) or seq[1] > seq[-1]:
                    continue
                out.append(Cycle(tuple(seq)))
            if len(out) > cap:
                return out[:cap], True, explored
    return out, False, explored


# --------------------------------------------------------------------------
# branch and bound
# --------------------------------------------------------------------------

class _Stop(Exception):
    pass


def _bnb_best(g: Graph, kind: Kind, deadline: Deadline) -> tuple[int, int]:
    """(best length, explored nodes) by depth-first branch and bound."""
    adj = g.adj
    best = 0
    explored = 0
    ceiling = g.n - 1 if kind == "path" else g.n

    def path_dfs(v: int, used: int, length: int) -> None:
        nonlocal best, explored
        explored += 1
        if explored & 4095 == 0:
            deadline.check()
        if length > best:
            best = length
            if best == ceiling:
                raise _Stop
        free = g.all_mask & ~used
        if length + g.reach(v, free | (1 << v)).bit_count() - 1 <= best:
            return
        for w in bits(adj[v] & free):
            path_dfs(w, used | (1 << w), length + 1)

    def cycle_dfs(s: int, v: int, used: int, count: int, allowed: int) -> None:
        nonlocal best, explored
        explored += 1
        if explored & 4095 == 0:
            deadline.check()
        if count >= 3 and adj[v] >> s & 1 and count > best:
            best = count
            if best == ceiling:
                raise _Stop
        free = allowed & ~used
        reach = g.reach(v, free | (1 << v))
        if not adj[s] & reach or count + reach.bit_count() - 1 <= best:
            return
        for w in bits(adj[v] & free):
            cycle_dfs(s, w, used | (1 << w), count + 1, allowed)

    try:
        for s in range(g.n):
            if kind == "path":
                if g.reach(s, g.all_mask).bit_count() - 1 <= best:
                    continue
                path_dfs(s, 1 << s, 0)
            else:
                allowed = g.all_mask & ~((1 << (s + 1)) - 1)
                if g.reach(s, allowed | (1 << s)).bit_count() <= best:
                    continue
                cycle_dfs(s, s, 1 << s, 1, allowed)
    except _Stop:
        pass
    return best, explored


def _bnb_enumerate(g: Graph, kind: Kind, target: int, cap: int,
                   deadline: Deadline) -> tuple[list, bool, int]:
    adj = g.adj
    out: list = []
    explored = 0
    want = target + 1 if kind == "path" else target

    def dfs(seq: list[int], used: int, allowed: int) -> None:
        nonlocal explored
        explored += 1
        if explored & 4095 == 0:
            deadline.check()
        v = seq[-1]
        s = seq[0]
        if len(seq) == want:
            if kind == "path":
                if len(seq) == 1 or seq[0] < seq[-1]:
                    out.append(Path(tuple(seq)))
            elif adj[v] >> s & 1 and seq[1] < seq[-1]:
                out.append(Cycle(tuple(seq)))
            if len(out) > cap:
                raise _Stop
            return
        free = allowed & ~used
        reach = g.reach(v, free | (1 << v))
        if len(seq) + reach.bit_count() - 1 < want:
            return
        if kind == "cycle" and not adj[s] & reach:
            return
        for w in bits(adj[v] & free):
            seq.append(w)
            dfs(seq, used | (1 << w), allowed)
            seq.pop()

    if kind == "cycle" and target < 3:
        return out, False, explored
    try:
        for s in range(g.n):
            allowed = g.all_mask if kind == "path" else g.all_mask & ~((1 << (s + 1)) - 1)
            dfs([s], 1 << s, allowed)
    except _Stop:
        return out[:cap], True, explored
    return out, False, explored


# --------------------------------------------------------------------------
# public API
# --------------------------------------------------------------------------

def longest_path_length(g: Graph, backend: str = "auto", deadline: Deadline = NO_DEADLINE) -> int:
    if _backend(g, backend) == "dp":
        return _dp_optima(g, "path")[0]
    return _bnb_best(g, "path", deadline)[0]


def circumference(g: Graph, backend: str = "auto", deadline: Deadline = NO_DEADLINE) -> int:
    """Length of a longest cycle, 0 for forests."""
    if _backend(g, backend) == "dp":
        return _dp_optima(g, "cycle")[0]
    return _bnb_best(g, "cycle", deadline)[0]


def enumerate_longest(g: Graph, kind: Kind, cap: int = DEFAULT_CAP, backend: str = "auto",
                      deadline: Deadline = NO_DEADLINE) -> SolveResult:
    """All longest paths or cycles, canonical and in ascending lexicographic order.

    At most ``cap`` witnesses are returned; ``truncated`` is set when more optima exist.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    if kind not in ("path", "cycle"):
        raise ValueError(f"unknown kind {kind!r}")
    if _backend(g, backend) == "dp":
        best, optima = _dp_optima(g, kind)
        found, truncated, explored = _dp_enumerate(g, kind, optima, cap, deadline)
        count = sum(optima.values())
    else:
        best, explored = _bnb_best(g, kind, deadline)
        found, truncated, more = _bnb_enumerate(g, kind, best, cap, deadline)
        explored += more
        count = None if truncated else len(found)
    return SolveResult(kind, best, tuple(found), truncated, explored, count)


def longest_path(g: Graph, cap: int = DEFAULT_CAP, backend: str = "auto") -> SolveResult:
    if g.n < 1:
        raise ValueError("longest_path needs n >= 1")
    return enumerate_longest(g, "path", cap, backend)


def longest_cycle(g: Graph, cap: int = DEFAULT_CAP, backend: str = "auto") -> SolveResult:
    return enumerate_longest(g, "cycle", cap, backend)


@dataclass(frozen=True)
class OptimumSets:
    """Vertex sets of all optima; what intersection statistics actually need."""

    kind: str
    best_length: int
    counts: dict[int, int]   # vertex mask -> number of optima with that vertex set
    truncated: bool

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def optimum_vertex_sets(g: Graph, kind: Kind, cap: int = DEFAULT_CAP, backend: str = "auto",
                        deadline: Deadline = NO_DEADLINE) -> OptimumSets:
    if _backend(g, backend) == "dp":
        best, optima = _dp_optima(g, kind)
        return OptimumSets(kind, best, optima, False)
    res = enumerate_longest(g, kind, cap, "bnb", deadline)
    counts: dict[int, int] = {}
    for w in res.witnesses:
        counts[w.mask] = counts.get(w.mask, 0) + 1
    return OptimumSets(kind, res.best_length, dict(sorted(counts.items())), res.truncated)


def first_witness(g: Graph, kind: Kind, mask: int) -> Path | Cycle:
    """Lexicographically first canonical optimum spanning exactly ``mask``."""
    if g.n <= DP_MAX_N:
        found, _, _ = _dp_enumerate(g, kind, {mask: 1}, 1, NO_DEADLINE)
        if not found:
            raise ValueError(f"no spanning {kind} on the given vertex set")
        return found[0]
    sub, new_id = g.induced(mask)
    old = sorted(new_id, key=new_id.__getitem__)
    backend = "dp" if sub.n <= DP_MAX_N else "bnb"
    res = enumerate_longest(sub, kind, cap=1, backend=backend)
    if not res.witnesses or len(res.witnesses[0].vertices) != sub.n:
        raise ValueError(f"no spanning {kind} on the given vertex set")
    seq = tuple(old[v] for v in res.witnesses[0].vertices)
    return Path(seq).canonical() if kind == "path" else Cycle(seq)


def dirac_check(g: Graph, circ: int | None = None) -> Verdict:
    """Circumference of a 2-connected graph is at least min(2 * min degree, n)."""
    if g.n < 3 or not is_k_connected(g, 2):
        return not_applicable("graph is not 2-connected")
    c = circumference(g) if circ is None else circ
    need = min(2 * g.min_degree(), g.n)
    if c >= need:
        return holds(circumference=c, required=need)
    return violated("circumference below min(2*delta, n)", circumference=c, required=need)
