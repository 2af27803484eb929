"""Pairwise intersections of longest paths/cycles, the intersection bounds, and
predicates for the conjecture families P(k, r) and C(k, r)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .connectivity import is_separator
from .graph import Cycle, Graph, Path, bits
from .longest import (DEFAULT_CAP, NO_DEADLINE, Deadline, Kind, circumference,
                      first_witness, optimum_vertex_sets)
from .verdict import Verdict, holds, inconclusive, not_applicable, violated

CHEN_CONSTANT = (256 ** (1 / 3) + 3) ** (-3 / 5)


def _raw_cycle_bound(n: int, k: int) -> int:
    return min(k, 8 * k - n - 16)


def _raw_path_bound(n: int, k: int) -> int:
    return min(k, 8 * k - n - 9)


def bound_cycles(n: int, k: int) -> int:
    """Guaranteed size of the intersection of two longest cycles in a k-connected graph."""
    if not 2 <= k <= n - 1:
        raise ValueError(f"need 2 <= k <= n-1, got n={n}, k={k}")
    return max(0, _raw_cycle_bound(n, k))


def bound_paths(n: int, k: int) -> int:
    """Guaranteed size of the intersection of two longest paths in a k-connected graph."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    return max(0, _raw_path_bound(n, k))


def chen_bound(k: float) -> float:
    # only meaningful for k >= 2; k = 1 is accepted so the constant itself can be read off
    return CHEN_CONSTANT * k ** 0.6


def cycle_threshold(n: int) -> int:
    """Smallest k for which the cycle bound reaches k."""
    return math.ceil((n + 16) / 7)


def path_threshold(n: int) -> int:
    return math.ceil((n + 9) / 7)


@dataclass(frozen=True)
class BoundQuery:
    n: int
    k: int
    cycle_raw: int | None
    cycle_bound: int | None
    path_raw: int | None
    path_bound: int | None
    chen_bound: float | None

    @classmethod
    def of(cls, n: int, k: int) -> BoundQuery:
        cyc = 2 <= k <= n - 1
        pth = 1 <= k <= n - 1
        return cls(
            n, k,
            _raw_cycle_bound(n, k) if cyc else None,
            bound_cycles(n, k) if cyc else None,
            _raw_path_bound(n, k) if pth else None,
            bound_paths(n, k) if pth else None,
            chen_bound(k) if k >= 2 else None,
        )

    def to_json(self) -> dict:
        return {
            "cycle_raw": self.cycle_raw, "cycle_bound": self.cycle_bound,
            "path_raw": self.path_raw, "path_bound": self.path_bound,
            "chen_bound": None if self.chen_bound is None else round(self.chen_bound, 6),
        }


class NoOptimumError(ValueError):
    pass


@dataclass(frozen=True)
class PairStats:
    kind: str
    optimum_length: int
    optimum_count: int
    min_intersection: int
    witness_pair: tuple[Path | Cycle, Path | Cycle]
    # pairs (A, A) count; a unique optimum therefore reports its own size
    includes_identical_pairs: bool
    # minimum over pairs of distinct optima, None when there is only one optimum
    distinct_min: int | None
    truncated: bool
    vertex_sets: int

    def to_json(self) -> dict:
        return {
            "optimum_length": self.optimum_length,
            "optimum_count": self.optimum_count,
            "vertex_sets": self.vertex_sets,
            "min_intersection": self.min_intersection,
            "distinct_min": self.distinct_min,
            "includes_identical_pairs": self.includes_identical_pairs,
            "truncated": self.truncated,
            "witness_pair": [list(w.vertices) for w in self.witness_pair],
        }


def _min_pair(masks: list[int]) -> tuple[int, int, int]:
    """(min |A & B| over i < j, i, j) for the first attaining pair in list order."""
    arr = np.array(masks, dtype=np.int64) if max(masks) < 1 << 62 else None
    best = (math.inf, 0, 0)
    for i in range(len(masks) - 1):
        if arr is not None:
            pops = np.bitwise_count(arr[i] & arr[i + 1:])
            j = int(np.argmin(pops))
            val = int(pops[j])
            j += i + 1
        else:
            val, j = min(((masks[i] & masks[j]).bit_count(), j) for j in range(i + 1, len(masks)))
        if val < best[0]:
            best = (val, i, j)
    return best  # type: ignore[return-value]


def pair_stats(g: Graph, kind: Kind, cap: int = DEFAULT_CAP, backend: str = "auto",
               deadline: Deadline = NO_DEADLINE) -> PairStats:
    if cap < 2:
        raise ValueError("cap must be at least 2")
    opt = optimum_vertex_sets(g, kind, cap, backend, deadline)
    if not opt.counts or (kind == "cycle" and opt.best_length < 3):
        raise NoOptimumError(f"graph has no {kind}")
    masks = sorted(opt.counts)
    if len(masks) == 1:
        m = masks[0]
        low, a, b = m.bit_count(), m, m
        distinct = low if opt.counts[m] >= 2 else None
    else:
        low, i, j = _min_pair(masks)
        a, b = masks[i], masks[j]
        distinct = low
    pair = (first_witness(g, kind, a), first_witness(g, kind, b))
    return PairStats(kind, opt.best_length, opt.total, low, pair, True, distinct,
                     opt.truncated, len(masks))


def verdict_from_stats(stats: PairStats, r: int) -> Verdict:
    if stats.min_intersection < r:
        return violated(f"two longest {stats.kind}s share {stats.min_intersection} < {r} vertices",
                        r=r, min_intersection=stats.min_intersection,
                        pair=[list(w.vertices) for w in stats.witness_pair])
    if stats.truncated:
        return inconclusive("enumeration truncated", r=r, observed_min=stats.min_intersection)
    return holds(r=r, min_intersection=stats.min_intersection)


def check_conjecture(g: Graph, kind: Kind, r: int, cap: int = DEFAULT_CAP) -> Verdict:
    """Do all pairs of longest paths (cycles) of ``g`` share at least ``r`` vertices?"""
    if r < 0:
        raise ValueError("r must be non-negative")
    return verdict_from_stats(pair_stats(g, kind, cap), r)


def check_separator_property(g: Graph, C: Cycle, D: Cycle, circ: int | None = None) -> Verdict:
    """Does V(C) & V(D) separate ``g`` for two longest cycles on different vertex sets?"""
    c = circumference(g) if circ is None else circ
    for cyc in (C, D):
        Cycle.in_graph(g, cyc.vertices)
        if cyc.length != c:
            raise ValueError(f"cycle {cyc.vertices} is not a longest cycle (circumference {c})")
    if C.mask == D.mask:
        # covers C == D; distinct cycles on one vertex set leave nothing to separate
        return not_applicable("C and D have the same vertex set")
    if g.is_complete():
        return not_applicable("complete graphs have no separator")
    if C.mask | D.mask == g.all_mask:
        return not_applicable("C and D together cover every vertex")
    X = C.mask & D.mask
    if is_separator(g, bits(X)):
        return holds(intersection=sorted(bits(X)))
    return violated("intersection does not separate the graph", C=list(C.vertices),
                    D=list(D.vertices), intersection=sorted(bits(X)))
