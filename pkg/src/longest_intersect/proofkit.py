"""Concrete instances of the intersection argument for two longest cycles.

Given a k-connected graph and two longest cycles C and D, this module builds
every object the argument talks about (the short path R off one cycle, the
two fans from its ends, the weighted auxiliary cycle on the fan endpoints)
and re-checks each intermediate inequality from the raw numbers. Every
cycle-rewiring step of the argument is carried out for real and the result
is validated, so a gap in the reasoning shows up as a refused rewiring or a
cycle longer than C.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .connectivity import PathSystem, fan
from .graph import Cycle, Graph, Path, bits
from .intersect import bound_cycles
from .longest import circumference
from .verdict import VIOLATED, Verdict, combine, holds, not_applicable, violated

CLAIMS = (
    "claim1_bicolored_arcs",
    "claim2_arc_weights",
    "claim3_arc_count",
    "claim4_length_bound",
    "eq1_length_vs_intersection",
    "claim5_bicolored_covered",
    "claim6_equal_case",
    "global_two_l_minus_n",
)


class NotApplicable(Exception):
    pass


class ProofkitError(RuntimeError):
    """The construction contradicts the fan lemma or cycle maximality: a bug or bad input."""


# --------------------------------------------------------------------------
# R selection
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RSelection:
    R: Path
    side: str            # "C": R lives in G - V(C); "D": in G - V(D)
    p: int
    r: int
    tiebreak_score: int  # edges R shares with the other cycle

    @property
    def length(self) -> int:
        return self.R.length


def _short_paths(g: Graph, within: int) -> list[tuple[int, ...]]:
    """Every path with at most two edges inside ``within``, both orientations."""
    out = []
    for a in bits(within):
        out.append((a,))
        for b in bits(g.adj[a] & within):
            out.append((a, b))
            for c in bits(g.adj[b] & within & ~(1 << a)):
                out.append((a, b, c))
    return out


def choose_R(g: Graph, C: Cycle, D: Cycle) -> RSelection:
    """Longest path of length <= 2 off C or off D, maximising overlap with the other cycle.

    Ties go to the lexicographically smallest vertex sequence, then to side C.
    """
    best = None
    for side, host, other in (("C", C, D), ("D", D, C)):
        rest = g.all_mask & ~host.mask
        other_edges = other.edge_set()
        for seq in _short_paths(g, rest):
            score = sum(frozenset(e) in other_edges for e in zip(seq, seq[1:]))
            key = (-(len(seq) - 1), -score, seq, side)
            if best is None or key < best[0]:
                best = (key, side, seq, score)
    if best is None:
        raise NotApplicable("both cycles are Hamiltonian")
    _, side, seq, score = best
    return RSelection(Path.in_graph(g, seq), side, seq[0], seq[-1], score)


# --------------------------------------------------------------------------
# fans
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FanPair:
    A: PathSystem
    B: PathSystem
    F: tuple[int, ...]          # fan endpoints on C, in C order
    discarded_a: int
    discarded_b: int

    def violations(self, g: Graph, sel: RSelection, k: int) -> list[str]:
        problems = self.A.violations(g) + self.B.violations(g)
        need = k - sel.length
        if len(self.A) < need or len(self.B) < need:
            problems.append(f"fan sizes {len(self.A)}, {len(self.B)} below k - |R| = {need}")
        rv = set(sel.R.vertices)
        for sys, root in ((self.A, sel.p), (self.B, sel.r)):
            for p in sys.paths:
                if set(p.vertices) & (rv - {root}):
                    problems.append(f"fan path {p.vertices} touches R away from its root")
        return problems


def _filtered_fan(g: Graph, root: int, C: Cycle, avoid: set[int], k: int) -> tuple[PathSystem, int]:
    full = fan(g, root, C.vertices, k, check_connectivity=False)
    kept = tuple(p for p in full.paths if not set(p.vertices) & avoid)
    return PathSystem(root, full.targets, kept), len(full) - len(kept)


def build_fans(g: Graph, C: Cycle, sel: RSelection, k: int) -> FanPair:
    """Fans from both ends of R into V(C), dropping paths that run through R."""
    if sel.side != "C":
        raise ValueError("selection must live off C; swap the cycles first")
    rv = set(sel.R.vertices)
    try:
        A, da = _filtered_fan(g, sel.p, C, rv - {sel.p}, k)
        if sel.p == sel.r:
            B, db = A, da
        else:
            B, db = _filtered_fan(g, sel.r, C, rv - {sel.r}, k)
    except ValueError as exc:
        raise ProofkitError(f"fan lemma failed: {exc}") from exc
    ends = set(A.ends) | set(B.ends)
    F = tuple(v for v in C.vertices if v in ends)
    pair = FanPair(A, B, F, da, db)
    problems = pair.violations(g, sel, k)
    if problems:
        raise ProofkitError("; ".join(problems))
    return pair


# --------------------------------------------------------------------------
# auxiliary weighted cycle
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AuxArc:
    u: int
    v: int          # u precedes v walking forward along C
    weight: int
    bicolored: bool


@dataclass(frozen=True)
class AuxCycleGraph:
    host: Cycle
    nodes: tuple[int, ...]
    arcs: tuple[AuxArc, ...]
    coloring: dict[int, str]     # "A", "B" or "AB"
    covered: frozenset[int]

    @property
    def bicolored_nodes(self) -> list[int]:
        return [v for v in self.nodes if self.coloring[v] == "AB"]

    @property
    def bicolored_arcs(self) -> list[AuxArc]:
        return [a for a in self.arcs if a.bicolored]

    @property
    def plain_nodes(self) -> list[int]:
        return [v for v in self.nodes if self.coloring[v] != "AB"]

    @property
    def plain_arcs(self) -> list[AuxArc]:
        return [a for a in self.arcs if not a.bicolored]

    @property
    def total_weight(self) -> int:
        return sum(a.weight for a in self.arcs)


def build_aux(C: Cycle, fp: FanPair, covered: int = 0) -> AuxCycleGraph:
    if len(fp.F) < 2:
        raise NotApplicable(f"only {len(fp.F)} fan endpoint(s) on C")
    a_ends, b_ends = set(fp.A.ends), set(fp.B.ends)
    coloring = {v: ("A" if v in a_ends else "") + ("B" if v in b_ends else "") for v in fp.F}
    pos = {v: i for i, v in enumerate(C.vertices)}
    arcs = []
    for i, u in enumerate(fp.F):
        v = fp.F[(i + 1) % len(fp.F)]
        w = (pos[v] - pos[u]) % C.length
        arcs.append(AuxArc(u, v, w, coloring[u] == "AB" or coloring[v] == "AB"))
    aux = AuxCycleGraph(C, fp.F, tuple(arcs), coloring,
                        frozenset(v for v in fp.F if covered >> v & 1))
    assert aux.total_weight == C.length
    return aux


# --------------------------------------------------------------------------
# rewiring
# --------------------------------------------------------------------------

class RewireRefusal(ValueError):
    def __init__(self, message: str, vertex: int | None = None) -> None:
        super().__init__(message)
        self.vertex = vertex


def _chain(pieces: Sequence[Sequence[int]]) -> list[int]:
    seq = list(pieces[0])
    for piece in pieces[1:]:
        if piece[0] != seq[-1]:
            raise RewireRefusal(f"replacement pieces do not chain at {seq[-1]} / {piece[0]}")
        seq.extend(piece[1:])
    return seq


def rewire(g: Graph, C: Cycle, u: int, v: int, replacement: Sequence[Path]) -> Cycle:
    """Replace the arc C[u,v] (forward from u to v) with the chained ``replacement`` paths."""
    chain = _chain([p.vertices for p in replacement])
    if chain[0] != u or chain[-1] != v:
        raise RewireRefusal(f"replacement runs {chain[0]}..{chain[-1]}, expected {u}..{v}")
    keep = C.arc(v, u)
    seq = list(keep) + chain[1:-1]
    seen: set[int] = set()
    for x in seq:
        if x in seen:
            raise RewireRefusal(f"vertex {x} used twice", x)
        seen.add(x)
    if len(seq) < 3:
        raise RewireRefusal("rewired walk is too short to be a cycle")
    return Cycle.in_graph(g, seq)


@dataclass(frozen=True)
class Rewiring:
    arc: tuple[int, int]
    case: str
    cycle: Cycle | None
    refusal: str | None
    max_length: int

    @property
    def ok(self) -> bool:
        return self.cycle is not None and self.cycle.length <= self.max_length

    def to_json(self) -> dict:
        out = {"arc": list(self.arc), "case": self.case}
        if self.cycle is not None:
            out["length"] = self.cycle.length
            out["cycle"] = list(self.cycle.vertices)
        if self.refusal:
            out["refusal"] = self.refusal
        return out


def _P(seq: Sequence[int]) -> Path:
    return Path(tuple(seq))


class _Context:
    """Everything the arc-level case analysis needs, with R oriented p -> r."""

    def __init__(self, g: Graph, C: Cycle, sel: RSelection, fp: FanPair) -> None:
        self.g, self.C, self.sel = g, C, sel
        self.fans = {"A": fp.A.end_map(), "B": fp.B.end_map()}
        self.root = {"A": sel.p, "B": sel.r}
        self.R = {"A": sel.R.vertices, "B": sel.R.vertices[::-1]}  # from that colour's root

    def attempt(self, u: int, v: int, case: str, pieces: list[Sequence[int]]) -> Rewiring:
        """Rewire arc (u, v) with ``pieces`` given as a chain from either end."""
        chain = _chain(pieces)
        if chain[0] == v:
            chain = chain[::-1]
        try:
            cyc = rewire(self.g, self.C, u, v, [_P(chain)])
            return Rewiring((u, v), case, cyc, None, self.C.length)
        except (RewireRefusal, ValueError) as exc:
            return Rewiring((u, v), case, None, str(exc), self.C.length)

    def mixed_plain(self, arc: AuxArc, a: int, b: int) -> Rewiring:
        """a is only A-coloured, b only B-coloured."""
        Pa, Qb = self.fans["A"][a].vertices, self.fans["B"][b].vertices
        if not set(Pa) & set(Qb):
            return self.attempt(arc.u, arc.v, "plain-mixed-disjoint",
                                [Pa[::-1], self.R["A"], Qb])
        # walk Q_b back from b to the first vertex on P_a
        back = Qb[::-1]
        i = next(i for i, x in enumerate(back) if x in Pa)
        x = back[i]
        return self.attempt(arc.u, arc.v, "plain-mixed-crossing",
                            [Pa[Pa.index(x):][::-1], back[:i + 1][::-1]])

    def bicolored(self, arc: AuxArc, z: int, zc: str, y: int) -> Rewiring:
        """y is bicoloured; z uses its ``zc`` fan path, y the other colour's."""
        oc = "B" if zc == "A" else "A"
        Z = self.fans[zc][z].vertices
        Y = self.fans[oc][y].vertices
        Yalt = self.fans[zc][y].vertices
        disjoint = [Z[::-1], self.R[zc], Y]
        if len(_chain(disjoint)) == len(set(_chain(disjoint))):
            return self.attempt(arc.u, arc.v, "bicolored-disjoint", disjoint)
        hit = set(Z) | set(Yalt)
        i = next(i for i in range(1, len(Y)) if Y[i] in hit)
        x = Y[i]
        if x in Z:
            j = Z.index(x)
            return self.attempt(arc.u, arc.v, "bicolored-cross-own",
                                [Z[j:][::-1], Y[:i + 1][::-1], self.R[oc], Yalt])
        j = Yalt.index(x)
        return self.attempt(arc.u, arc.v, "bicolored-cross-other",
                            [Z[::-1], self.R[zc], Y[:i + 1], Yalt[j:]])

    def for_arc(self, arc: AuxArc, coloring: dict[int, str]) -> Rewiring:
        cu, cv = coloring[arc.u], coloring[arc.v]
        if not arc.bicolored:
            if cu == cv:
                c = cu
                return self.attempt(arc.u, arc.v, f"plain-{c}{c}",
                                    [self.fans[c][arc.u].vertices[::-1], self.fans[c][arc.v].vertices])
            a, b = (arc.u, arc.v) if cu == "A" else (arc.v, arc.u)
            return self.mixed_plain(arc, a, b)
        if cv == "AB":
            z, y = arc.u, arc.v
        else:
            z, y = arc.v, arc.u
        zc = "A" if "A" in coloring[z] else "B"
        return self.bicolored(arc, z, zc, y)


# --------------------------------------------------------------------------
# claim verification
# --------------------------------------------------------------------------

@dataclass
class ClaimReport:
    verdicts: dict[str, Verdict]
    branch: str = "not-applicable"
    quantities: dict[str, int] = field(default_factory=dict)
    R: tuple[int, ...] | None = None
    side: str | None = None
    rewirings: list[Rewiring] = field(default_factory=list)
    # intermediate steps of the final counting argument; not claims themselves
    steps: dict[str, Verdict] = field(default_factory=dict)

    @property
    def violated(self) -> list[str]:
        return [name for name, v in self.verdicts.items() if v.status == VIOLATED]

    @property
    def rewirings_ok(self) -> bool:
        return all(rw.ok for rw in self.rewirings)

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "R": None if self.R is None else list(self.R),
            "side": self.side,
            "quantities": self.quantities,
            "claims": {name: v.to_json() for name, v in self.verdicts.items()},
            "steps": {name: v.to_json() for name, v in self.steps.items()},
            "rewirings": [rw.to_json() for rw in self.rewirings],
        }


def _all_na(reason: str) -> ClaimReport:
    return ClaimReport({name: not_applicable(reason) for name in CLAIMS})


def _check(cond: bool, message: str, **witness) -> Verdict:
    return holds(**witness) if cond else violated(message, **witness)


def verify_claims(g: Graph, C: Cycle, D: Cycle, k: int, circ: int | None = None) -> ClaimReport:
    """Run the whole construction on (g, C, D) and evaluate every claim.

    ``k`` is the connectivity of ``g``; C and D must be longest cycles.
    """
    L = circumference(g) if circ is None else circ
    for cyc in (C, D):
        Cycle.in_graph(g, cyc.vertices)
        if cyc.length != L:
            raise ValueError(f"{cyc.vertices} is not a longest cycle")
    if C == D:
        return _all_na("C = D")
    if k < 2:
        return _all_na("graph is not 2-connected")
    try:
        sel = choose_R(g, C, D)
    except NotApplicable as exc:
        return _all_na(str(exc))
    if sel.side == "D":
        C, D = D, C
        sel = RSelection(sel.R, "C", sel.p, sel.r, sel.tiebreak_score)
    n = g.n
    X = C.mask & D.mask
    x_size = X.bit_count()
    report = _all_na("construction incomplete")
    report.R, report.side = sel.R.vertices, "C"

    fp = build_fans(g, C, sel, k)
    try:
        aux = build_aux(C, fp, covered=X)
    except NotApplicable as exc:
        report.verdicts = {name: not_applicable(str(exc)) for name in CLAIMS}
        report.verdicts["global_two_l_minus_n"] = _check(x_size >= 2 * L - n, "|X| < 2L - n",
                                                         X=x_size, L=L, n=n)
        return report

    rlen = sel.length
    Fp = aux.bicolored_nodes
    Cp = aux.bicolored_arcs
    Cpp = aux.plain_arcs
    q = {"n": n, "k": k, "L": L, "X": x_size, "R": rlen, "A": len(fp.A), "B": len(fp.B),
         "F": len(fp.F), "F_bicolored": len(Fp), "C_bicolored": len(Cp),
         "discarded_A": fp.discarded_a, "discarded_B": fp.discarded_b}
    report.quantities = q
    v: dict[str, Verdict] = {}

    v["claim1_bicolored_arcs"] = _check(len(Cp) >= len(Fp), "|C'| < |F'|",
                                        C_bicolored=len(Cp), F_bicolored=len(Fp))

    ctx = _Context(g, C, sel, fp)
    bad_arcs = []
    for arc in aux.arcs:
        need = 2 + rlen if arc.bicolored else 2
        if arc.weight < need:
            bad_arcs.append({"arc": [arc.u, arc.v], "weight": arc.weight, "required": need})
        report.rewirings.append(ctx.for_arc(arc, aux.coloring))
    v["claim2_arc_weights"] = (violated("arc lighter than required", arcs=bad_arcs) if bad_arcs
                               else holds(arcs=len(aux.arcs)))

    n_a = sum(1 for c in aux.coloring.values() if "A" in c)
    n_b = sum(1 for c in aux.coloring.values() if "B" in c)
    v["claim3_arc_count"] = _check(len(aux.arcs) == len(fp.F) == n_a + n_b - len(Fp)
                                   and n_a == len(fp.A) and n_b == len(fp.B),
                                   "|E(C*)| != |A| + |B| - |F'|",
                                   arcs=len(aux.arcs), A=len(fp.A), B=len(fp.B), F_bicolored=len(Fp))

    lower = 4 * (k - rlen) + rlen * len(Cp) - 2 * len(Fp)
    direct = 2 * len(fp.A) + 2 * len(fp.B) - 2 * len(Fp) + rlen * len(Cp)
    v["claim4_length_bound"] = _check(L >= direct >= lower, "L below 4(k-|R|) + |R||C'| - 2|F'|",
                                      L=L, bound=lower, intermediate=direct)

    # components of D - C are the maximal runs of D outside C
    runs = _runs_outside(D, C.mask)
    if all(len(run) <= 2 for run in runs):
        v["eq1_length_vs_intersection"] = _check(L <= 3 * x_size, "L > 3|X|", L=L, X=x_size)
    else:
        v["eq1_length_vs_intersection"] = not_applicable("D - C has a component with 3+ vertices")

    r_is_d_edge = rlen == 1 and frozenset(sel.R.vertices) in D.edge_set()
    if rlen == 2:
        branch = "R2"
    elif all(len(run) == 1 for run in runs):
        branch = "D-C-isolated"
    elif not Fp:
        branch = "no-bicolored"
    elif len(Cp) == len(Fp):
        branch = "C'=F'"
    else:
        branch = "main"
    report.branch = branch

    if r_is_d_edge and branch != "R2":
        v["claim5_bicolored_covered"] = _claim5(ctx, aux, fp, X, report)
    else:
        v["claim5_bicolored_covered"] = not_applicable("R is not an edge of D - C")
    if r_is_d_edge and Fp:
        if len(Cp) == len(Fp):
            v["claim6_equal_case"] = _check(x_size >= k, "|C'| = |F'| but |X| < k", X=x_size, k=k)
        else:
            v["claim6_equal_case"] = not_applicable("|C'| != |F'|")
    else:
        v["claim6_equal_case"] = not_applicable("needs R an edge of D - C and a bicolored node")

    v["global_two_l_minus_n"] = _check(x_size >= 2 * L - n, "|X| < 2L - n", X=x_size, L=L, n=n)
    report.verdicts = v

    report.steps["intersection_bound"] = _check(x_size >= bound_cycles(n, k),
                                           "|X| below min(k, 8k - n - 16)", X=x_size)
    if branch == "main":
        report.steps["x_at_least_bicolored_arcs"] = _check(x_size >= len(Cp), "|X| < |C'|",
                                                           X=x_size, C_bicolored=len(Cp))
        report.steps["final_length_bound"] = _check(L >= 4 * k - 2 - x_size, "L < 4k - 2 - |X|",
                                                    L=L, k=k, X=x_size)
    bad = [rw.to_json() for rw in report.rewirings if not rw.ok]
    report.steps["rewirings"] = (violated("rewiring failed or produced a longer cycle", failures=bad)
                                 if bad else holds(count=len(report.rewirings)))
    return report


def _runs_outside(D: Cycle, inside: int) -> list[tuple[int, ...]]:
    """Maximal runs of consecutive vertices of D that avoid ``inside``."""
    vs = D.vertices
    if not any(inside >> x & 1 for x in vs):
        return [vs]
    start = next(i for i, x in enumerate(vs) if inside >> x & 1)
    rot = vs[start:] + vs[:start]
    runs, cur = [], []
    for x in rot:
        if inside >> x & 1:
            if cur:
                runs.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        runs.append(tuple(cur))
    return runs


def _claim5(ctx: _Context, aux: AuxCycleGraph, fp: FanPair, X: int, report: ClaimReport) -> Verdict:
    sel = ctx.sel
    long_paths = [p.vertices for p in fp.A.paths + fp.B.paths if p.length != 1]
    if long_paths:
        return violated("fan path of length > 1 although G - C has no 2-edge path",
                        path=list(long_paths[0]))
    for u in aux.bicolored_nodes:
        if not X >> u & 1:
            return violated("bicolored node not on D", node=u)
    light = []
    for arc in aux.bicolored_arcs:
        if arc.weight < 3:
            light.append({"arc": [arc.u, arc.v], "weight": arc.weight})
        u, w = (arc.u, arc.v) if aux.coloring[arc.u] == "AB" else (arc.v, arc.u)
        if "A" in aux.coloring[w]:
            pieces = [fp.B.end_map()[u].vertices[::-1], sel.R.vertices[::-1], fp.A.end_map()[w].vertices]
        else:
            pieces = [fp.A.end_map()[u].vertices[::-1], sel.R.vertices, fp.B.end_map()[w].vertices]
        report.rewirings.append(ctx.attempt(arc.u, arc.v, "claim5-neighbour", pieces))
    if light:
        return violated("arc at a bicolored node lighter than 3", arcs=light)
    return holds(bicolored=len(aux.bicolored_nodes))


def distinct_cycle_pairs(cycles: Sequence[Cycle]) -> list[tuple[Cycle, Cycle]]:
    return list(combinations(cycles, 2))


def fold_pair_reports(reports: Sequence[ClaimReport]) -> dict[str, Verdict]:
    """Fold per-pair reports into one verdict per claim (violations first)."""
    out = {}
    for name in CLAIMS:
        out[name] = combine(r.verdicts[name] for r in reports)
    out["rewirings"] = combine(r.steps.get("rewirings", not_applicable("none")) for r in reports)
    return out

