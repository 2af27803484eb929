"""Cone (universal vertex) reduction: longest paths of G become longest cycles
through the apex of G + s, which turns path-intersection questions on
k-connected graphs into cycle-intersection questions on (k+1)-connected ones."""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import vertex_connectivity
from .graph import MAX_VERTICES, Cycle, Graph, GraphError, Path
from .intersect import pair_stats
from .longest import DEFAULT_CAP, enumerate_longest, optimum_vertex_sets
from .verdict import Verdict, holds, inconclusive, not_applicable, violated


@dataclass(frozen=True)
class ConeResult:
    original: Graph
    coned: Graph
    apex: int


def cone(g: Graph) -> ConeResult:
    if g.n < 1:
        raise GraphError("cone needs at least one vertex")
    if g.n + 1 > MAX_VERTICES:
        raise GraphError(f"cone of an {g.n}-vertex graph exceeds the {MAX_VERTICES} vertex cap")
    apex = g.n
    rows = [row | (1 << apex) for row in g.adj]
    rows.append(g.all_mask)
    return ConeResult(g, Graph(g.n + 1, tuple(rows)), apex)


def lift_path(p: Path, cr: ConeResult) -> Cycle:
    Path.in_graph(cr.original, p.vertices)
    if len(p.vertices) < 2:
        raise ValueError("a single-vertex path would close into a 2-cycle")
    return Cycle.in_graph(cr.coned, p.vertices + (cr.apex,))


def project_cycle(c: Cycle, cr: ConeResult) -> Path:
    Cycle.in_graph(cr.coned, c.vertices)
    if cr.apex not in c.vertices:
        raise ValueError("cycle does not pass through the apex")
    i = c.vertices.index(cr.apex)
    seq = c.vertices[i + 1:] + c.vertices[:i]
    return Path.in_graph(cr.original, seq).canonical()


@dataclass
class ReductionReport:
    kappa: int | None = None
    kappa_cone: int | None = None
    connectivity: Verdict = field(default_factory=lambda: not_applicable("not run"))
    apex_on_longest_cycles: Verdict = field(default_factory=lambda: not_applicable("not run"))
    bijection: Verdict = field(default_factory=lambda: not_applicable("not run"))
    intersection_offset: Verdict = field(default_factory=lambda: not_applicable("not run"))

    def verdicts(self) -> dict[str, Verdict]:
        return {
            "connectivity": self.connectivity,
            "apex_on_longest_cycles": self.apex_on_longest_cycles,
            "bijection": self.bijection,
            "intersection_offset": self.intersection_offset,
        }

    def to_json(self) -> dict:
        out: dict = {"kappa": self.kappa, "kappa_cone": self.kappa_cone}
        out.update({name: v.to_json() for name, v in self.verdicts().items()})
        return out


def verify_reduction(g: Graph, cap: int = DEFAULT_CAP, kappa: int | None = None) -> ReductionReport:
    report = ReductionReport()
    if g.n < 2:
        reason = "cone of a single vertex has no cycle"
        report.connectivity = report.apex_on_longest_cycles = not_applicable(reason)
        report.bijection = report.intersection_offset = not_applicable(reason)
        return report
    if not g.is_connected():
        raise ValueError("verify_reduction needs a connected graph")
    cr = cone(g)
    h, s = cr.coned, cr.apex

    k = vertex_connectivity(g) if kappa is None else kappa
    k2 = vertex_connectivity(h)
    report.kappa, report.kappa_cone = k, k2
    if k2 == k + 1:
        report.connectivity = holds(kappa=k, kappa_cone=k2)
    else:
        report.connectivity = violated("cone connectivity is not kappa + 1", kappa=k, kappa_cone=k2)

    paths = optimum_vertex_sets(g, "path", cap)
    cycles = optimum_vertex_sets(h, "cycle", cap)
    off_apex = [m for m in cycles.counts if not m >> s & 1]
    if off_apex:
        report.apex_on_longest_cycles = violated("a longest cycle of the cone avoids the apex",
                                                 vertex_set=[v for v in range(h.n) if off_apex[0] >> v & 1])
    elif cycles.truncated:
        report.apex_on_longest_cycles = inconclusive("cone enumeration truncated")
    else:
        report.apex_on_longest_cycles = holds(cone_circumference=cycles.best_length)

    report.bijection = _check_bijection(g, cr, paths.best_length, cycles.best_length,
                                        None if paths.truncated else paths.total,
                                        None if cycles.truncated else cycles.total, cap)

    ps = pair_stats(g, "path", cap)
    cs = pair_stats(h, "cycle", cap)
    detail = dict(path_min=ps.min_intersection, cycle_min=cs.min_intersection)
    if cs.min_intersection == ps.min_intersection + 1 and not (ps.truncated or cs.truncated):
        report.intersection_offset = holds(**detail)
    elif ps.truncated or cs.truncated:
        report.intersection_offset = inconclusive("enumeration truncated", **detail)
    else:
        report.intersection_offset = violated("cycle minimum is not path minimum + 1", **detail)
    return report


def _check_bijection(g: Graph, cr: ConeResult, path_len: int, circ: int,
                     n_paths: int | None, n_cycles: int | None, cap: int) -> Verdict:
    if circ != path_len + 2:
        return violated("cone circumference is not longest path length + 2",
                        longest_path=path_len, cone_circumference=circ)
    if n_paths is None or n_cycles is None:
        return inconclusive("optimum counts unknown (enumeration truncated)")
    if n_paths != n_cycles:
        return violated("longest path and cone longest cycle counts differ",
                        paths=n_paths, cycles=n_cycles)
    if n_paths > cap:
        return holds("counts agree; sets too large to compare one by one", count=n_paths)
    lp = enumerate_longest(g, "path", cap)
    lc = enumerate_longest(cr.coned, "cycle", cap)
    lifted = {lift_path(p, cr) for p in lp.witnesses}
    if lifted != set(lc.witnesses):
        extra = sorted(set(lc.witnesses) - lifted, key=lambda c: c.vertices)
        return violated("lifted longest paths differ from cone longest cycles",
                        example=list(extra[0].vertices) if extra else None)
    if {project_cycle(c, cr) for c in lc.witnesses} != set(lp.witnesses):
        return violated("projected cone cycles differ from longest paths")
    return holds(count=n_paths)
