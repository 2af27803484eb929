"""Command line front end: scan graph6 corpora, inspect one graph, generate graphs.

Reports are JSON Lines, one object per input line, written in input order no
matter how many workers run. The scan summary goes to stderr after the last
report. Exit status: 0 clean, 1 some check was violated, 2 operational error.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from contextlib import nullcontext
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, TextIO

from .connectivity import vertex_connectivity
from .generators import FAMILIES, gen_gnp, gen_named, gen_random_connected, gen_random_k_connected
from .graph import Graph, GraphError
from .graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6_lines
from .intersect import BoundQuery, PairStats, check_separator_property, pair_stats, verdict_from_stats
from .longest import (DEFAULT_CAP, BudgetExceeded, Deadline, dirac_check, enumerate_longest,
                      first_witness, optimum_vertex_sets)
from .proofkit import ClaimReport, fold_pair_reports, verify_claims
from .reduction import verify_reduction
from .verdict import STATUSES, VIOLATED, Verdict, combine, inconclusive, not_applicable

CHECKS = ("conjectures", "dirac", "separator", "reduction", "proofkit")
DEFAULT_CHECKS = ("conjectures", "dirac")
CONJECTURE_VERDICTS = ("cycle_bound", "cycle_smith", "path_bound", "path_hippchen")

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# --------------------------------------------------------------------------
# per-graph analysis
# --------------------------------------------------------------------------

def _conjecture_verdicts(g: Graph, k: int, cyc: PairStats | None, pth: PairStats | None) -> dict[str, Verdict]:
    n = g.n
    out: dict[str, Verdict] = {}
    if cyc is not None and 2 <= k <= n - 1:
        bq = BoundQuery.of(n, k)
        out["cycle_bound"] = verdict_from_stats(cyc, bq.cycle_bound)
        out["cycle_smith"] = (verdict_from_stats(cyc, k) if k <= 7
                              else not_applicable("only settled for k <= 7"))
    else:
        reason = "needs 2 <= kappa <= n-1"
        out["cycle_bound"] = out["cycle_smith"] = not_applicable(reason)
    if pth is not None and 1 <= k <= n - 1:
        bq = BoundQuery.of(n, k)
        out["path_bound"] = verdict_from_stats(pth, bq.path_bound)
        out["path_hippchen"] = (verdict_from_stats(pth, k) if k <= 6
                                else not_applicable("only settled for k <= 6"))
    else:
        reason = "needs 1 <= kappa <= n-1"
        out["path_bound"] = out["path_hippchen"] = not_applicable(reason)
    return out


def _separator_verdict(g: Graph, k: int, circ: int, masks: list[int], truncated: bool) -> Verdict:
    if not 3 <= k <= 7:
        return not_applicable("needs 3 <= kappa <= 7")
    pairs = list(combinations(masks, 2))
    if not pairs:
        return not_applicable("no two longest cycles on different vertex sets")
    verdicts = []
    witness = {m: first_witness(g, "cycle", m) for m in sorted({m for p in pairs for m in p})}
    for a, b in pairs:
        v = check_separator_property(g, witness[a], witness[b], circ)
        verdicts.append(v)
        if v.status == VIOLATED:
            return v
    if truncated:
        return inconclusive("cycle enumeration truncated", pairs_checked=len(verdicts))
    return combine(verdicts)


def _proofkit(g: Graph, k: int, circ: int, cap: int, deadline: Deadline,
              keep_first: bool) -> tuple[dict[str, Verdict], dict]:
    """Run the claim checker on every pair of distinct longest cycles."""
    section: dict[str, Any] = {"pairs": 0, "branches": {}}
    if k < 2 or circ < 3:
        reason = "graph is not 2-connected"
    elif circ == g.n:
        # every longest cycle is Hamiltonian, so no R exists
        reason = "longest cycles are Hamiltonian"
    else:
        reason = ""
    if reason:
        verdicts = fold_pair_reports([])
        return {name: not_applicable(reason) for name in verdicts}, section
    res = enumerate_longest(g, "cycle", cap, deadline=deadline)
    reports: list[ClaimReport] = []
    branches: Counter = Counter()
    for C, D in combinations(res.witnesses, 2):
        deadline.check()
        rep = verify_claims(g, C, D, k, circ)
        reports.append(rep)
        branches[rep.branch] += 1
        if keep_first and "example" not in section and rep.branch != "not-applicable":
            section["example"] = {"C": list(C.vertices), "D": list(D.vertices), **rep.to_json()}
    section["pairs"] = len(reports)
    section["branches"] = dict(sorted(branches.items()))
    section["truncated"] = res.truncated
    verdicts = fold_pair_reports(reports)
    if res.truncated:
        verdicts = {name: (inconclusive("cycle enumeration truncated") if v.status != VIOLATED else v)
                    for name, v in verdicts.items()}
    return verdicts, section


def analyze(g: Graph, checks: Iterable[str] = DEFAULT_CHECKS, cap: int = DEFAULT_CAP,
            budget_ms: float | None = None, enumerate_pairs: bool = True,
            detail: bool = False) -> dict:
    """Build the report for one graph. Raises BudgetExceeded when over budget."""
    checks = set(checks)
    deadline = Deadline(budget_ms)
    n = g.n
    k = vertex_connectivity(g) if n else 0
    rep: dict[str, Any] = {"n": n, "m": g.edge_count, "kappa": k, "min_degree": g.min_degree() if n else 0}

    cycles = optimum_vertex_sets(g, "cycle", cap, deadline=deadline)
    paths = optimum_vertex_sets(g, "path", cap, deadline=deadline) if n else None
    circ = cycles.best_length if cycles.best_length >= 3 else 0
    rep["circumference"] = circ
    rep["longest_path"] = paths.best_length if paths else None
    rep["optimum_counts"] = {"cycle": cycles.total if circ else 0, "path": paths.total if paths else 0}
    rep["truncated"] = {"cycle": cycles.truncated, "path": paths.truncated if paths else False}
    rep["bounds"] = BoundQuery.of(n, k).to_json()

    cyc = pth = None
    if enumerate_pairs:
        if circ:
            cyc = pair_stats(g, "cycle", cap, deadline=deadline)
        if paths:
            pth = pair_stats(g, "path", cap, deadline=deadline)
        rep["pairs"] = {"cycle": cyc.to_json() if cyc else None, "path": pth.to_json() if pth else None}

    verdicts: dict[str, Verdict] = {}
    if "conjectures" in checks:
        if enumerate_pairs:
            verdicts.update(_conjecture_verdicts(g, k, cyc, pth))
        else:
            verdicts.update({name: not_applicable("pair enumeration disabled")
                             for name in CONJECTURE_VERDICTS})
    if "dirac" in checks:
        verdicts["dirac"] = dirac_check(g, circ)
    if "separator" in checks:
        masks = sorted(cycles.counts) if circ else []
        verdicts["separator"] = _separator_verdict(g, k, circ, masks, cycles.truncated)
    if "reduction" in checks:
        if n >= 2 and k >= 1:
            red = verify_reduction(g, cap, kappa=k)
            rep["reduction"] = red.to_json()
            verdicts.update({f"reduction.{name}": v for name, v in red.verdicts().items()})
        else:
            reason = "needs a connected graph on at least 2 vertices"
            for name in ("connectivity", "apex_on_longest_cycles", "bijection", "intersection_offset"):
                verdicts[f"reduction.{name}"] = not_applicable(reason)
    if "proofkit" in checks:
        pk, section = _proofkit(g, k, circ, cap, deadline, keep_first=detail)
        rep["proofkit"] = section
        verdicts.update({f"proofkit.{name}": v for name, v in pk.items()})

    if detail and enumerate_pairs:
        rep["witnesses"] = _render_witnesses(g, cap)
    rep["verdicts"] = {name: v.to_json() for name, v in sorted(verdicts.items())}
    return rep


def _render_witnesses(g: Graph, cap: int, show: int = 10) -> dict:
    out = {}
    for kind in ("cycle", "path"):
        res = enumerate_longest(g, kind, min(cap, show))
        out[kind] = [list(w.vertices) for w in res.witnesses if kind == "path" or w.length >= 3]
    return out


def _timeout_verdicts(checks: Iterable[str]) -> dict:
    names: list[str] = []
    for c in checks:
        if c == "conjectures":
            names += CONJECTURE_VERDICTS
        elif c in ("dirac", "separator"):
            names.append(c)
        elif c == "reduction":
            names += [f"reduction.{x}" for x in
                      ("connectivity", "apex_on_longest_cycles", "bijection", "intersection_offset")]
        elif c == "proofkit":
            names += [f"proofkit.{x}" for x in fold_pair_reports([])]
    v = inconclusive("timeout").to_json()
    return {name: v for name in sorted(names)}


def process_line(job: tuple[int, str, tuple[str, ...], int, float | None, bool]) -> dict:
    """Worker entry point: never raises, always returns a record."""
    lineno, text, checks, cap, budget_ms, timing = job
    start = time.perf_counter()
    rec: dict[str, Any] = {"line": lineno, "graph6": text}
    try:
        g = parse_graph6(text)
    except (Graph6Error, GraphError) as exc:
        rec.update(status="error", error=str(exc))
        return rec
    try:
        rec.update(analyze(g, checks, cap, budget_ms))
        rec["status"] = "ok"
    except BudgetExceeded:
        rec.update(n=g.n, status="timeout", verdicts=_timeout_verdicts(checks))
    except Exception as exc:  # noqa: BLE001 - one bad graph must not stop the scan
        rec.update(status="error", error=f"{type(exc).__name__}: {exc}")
    if timing:
        rec["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return rec


def ordered_map(fn: Callable[[Any], Any], items: Iterable[Any], workers: int,
                window: int | None = None) -> Iterator[Any]:
    """Map in a process pool, yielding results in input order.

    At most ``window`` jobs are in flight, so memory stays bounded on long streams.
    """
    if workers <= 1:
        yield from map(fn, items)
        return
    window = window or 4 * workers
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending: deque = deque()
        for item in items:
            pending.append(pool.submit(fn, item))
            if len(pending) >= window:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()


class Summary:
    def __init__(self) -> None:
        self.graphs = 0
        self.errors = 0
        self.timeouts = 0
        self.counts: dict[str, Counter] = {}

    def add(self, rec: dict) -> None:
        self.graphs += 1
        if rec["status"] == "error":
            self.errors += 1
        elif rec["status"] == "timeout":
            self.timeouts += 1
        for name, v in rec.get("verdicts", {}).items():
            self.counts.setdefault(name, Counter())[v["status"]] += 1

    @property
    def violated(self) -> int:
        return sum(c[VIOLATED] for c in self.counts.values())

    def to_json(self) -> dict:
        return {
            "graphs": self.graphs, "errors": self.errors, "timeouts": self.timeouts,
            "violated": self.violated,
            "checks": {name: {s: c[s] for s in STATUSES} for name, c in sorted(self.counts.items())},
        }

    def write_csv(self, fh: TextIO) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["check", *STATUSES])
        for name, c in sorted(self.counts.items()):
            w.writerow([name, *(c[s] for s in STATUSES)])


def scan(lines: Iterable[str], out: TextIO, checks: tuple[str, ...] = DEFAULT_CHECKS,
         cap: int = DEFAULT_CAP, workers: int = 1, budget_ms: float | None = None,
         timing: bool = False) -> Summary:
    summary = Summary()
    jobs = ((lineno, text, checks, cap, budget_ms, timing) for lineno, text in read_graph6_lines(lines))
    for rec in ordered_map(process_line, jobs, workers):
        summary.add(rec)
        out.write(_dumps(rec) + "\n")
    return summary


# --------------------------------------------------------------------------
# command line
# --------------------------------------------------------------------------

class SpecError(ValueError):
    pass


def _ints(params: list[str]) -> list[int]:
    try:
        return [int(p) for p in params]
    except ValueError as exc:
        raise SpecError(f"expected integer parameters, got {params}") from exc


def graph_from_spec(args: list[str]) -> Graph:
    """A family name with integer parameters, or a single graph6 string."""
    if not args:
        raise SpecError("empty graph specification")
    if args[0] in FAMILIES:
        try:
            return gen_named(args[0], *_ints(args[1:]))
        except (TypeError, ValueError) as exc:
            raise SpecError(f"bad parameters for {args[0]}: {exc}") from exc
    if len(args) != 1:
        raise SpecError(f"unknown family {args[0]!r}")
    try:
        return parse_graph6(args[0])
    except (Graph6Error, GraphError) as exc:
        raise SpecError(f"not a family name or graph6 string: {exc}") from exc


def _key_values(params: list[str]) -> tuple[list[str], dict[str, str]]:
    pos, kv = [], {}
    for p in params:
        if "=" in p:
            key, val = p.split("=", 1)
            kv[key] = val
        else:
            pos.append(p)
    return pos, kv


RANDOM_SPECS = {
    # name: (parameter names, builder)
    "random-kconn": (("n", "k"), lambda n, k, seed: gen_random_k_connected(int(n), int(k), seed)),
    "random-connected": (("n", "p"), lambda n, p, seed: gen_random_connected(int(n), float(p), seed)),
    "random-gnp": (("n", "p"), lambda n, p, seed: gen_gnp(int(n), float(p), seed)),
}


def generate(spec: list[str], count: int = 1, seed: int = 0) -> list[Graph]:
    """Graphs for a generator spec.

    Random specs take ``n=10 k=3`` style or positional parameters and draw
    ``count`` graphs; named families ignore ``count`` and yield one graph.
    """
    if not spec:
        raise SpecError("empty generator specification")
    pos, kv = _key_values(spec[1:])
    count = int(kv.pop("count", count))
    seed = int(kv.pop("seed", seed))
    if count < 0:
        raise SpecError("count must be non-negative")
    if spec[0] in RANDOM_SPECS:
        names, build = RANDOM_SPECS[spec[0]]
        values = dict(zip(names, pos))
        values.update(kv)
        if set(values) != set(names):
            raise SpecError(f"{spec[0]} needs parameters {', '.join(names)}")
        rng = random.Random(seed)
        try:
            return [build(*(values[x] for x in names), rng.getrandbits(63)) for _ in range(count)]
        except (TypeError, ValueError, GraphError) as exc:
            raise SpecError(f"bad parameters for {spec[0]}: {exc}") from exc
    if kv:
        raise SpecError(f"unexpected parameters {sorted(kv)}")
    return [graph_from_spec([spec[0], *pos])]


def _parse_checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return CHECKS
    chosen = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in chosen if c not in CHECKS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    return tuple(c for c in CHECKS if c in chosen)


def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return val


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="longest-intersect", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sc = sub.add_parser("scan", help="check every graph of a graph6 stream")
    sc.add_argument("input", nargs="?", default="-", help="graph6 file, '-' for stdin")
    sc.add_argument("--census", action="store_true",
                    help="scan the packaged census of connected graphs on 3..8 vertices")
    sc.add_argument("--checks", type=_parse_checks, default=DEFAULT_CHECKS,
                    help=f"comma list from {','.join(CHECKS)} or 'all' (default: conjectures,dirac)")
    sc.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    sc.add_argument("--workers", type=_positive, default=1)
    sc.add_argument("--budget-ms", type=float, default=None)
    sc.add_argument("--out", default="-", help="report file, '-' for stdout")
    sc.add_argument("--summary-csv", default=None)
    sc.add_argument("--timing", action="store_true", help="add wall_ms to each record")

    ins = sub.add_parser("inspect", help="detailed report for one graph")
    ins.add_argument("graph", nargs="+", help="graph6 string or family name with parameters")
    ins.add_argument("--no-enum", action="store_true", help="lengths only, skip pair statistics")
    ins.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    gen = sub.add_parser("generate", help="emit graph6 lines")
    gen.add_argument("spec", nargs="+", help="family with parameters or random-kconn/random-connected/random-gnp")
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--seed", type=int, default=0)
    return ap


def _err(msg: str) -> int:
    print(f"longest-intersect: {msg}", file=sys.stderr)
    return EXIT_ERROR


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        if args.census:
            from .census import open_census
            src = open_census()
        elif args.input == "-":
            src = sys.stdin
        else:
            src = open(args.input, encoding="ascii", errors="replace")
        out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="ascii")
    except OSError as exc:
        return _err(str(exc))
    try:
        with src if src is not sys.stdin else nullcontext(), out if out is not sys.stdout else nullcontext():
            summary = scan(src, out, args.checks, args.cap, args.workers, args.budget_ms, args.timing)
        if args.summary_csv:
            with open(args.summary_csv, "w", encoding="ascii") as fh:
                summary.write_csv(fh)
    except OSError as exc:
        return _err(str(exc))
    print(_dumps({"summary": summary.to_json()}), file=sys.stderr)
    return EXIT_VIOLATION if summary.violated else EXIT_OK


def cmd_inspect(args: argparse.Namespace) -> int:
    try:
        g = graph_from_spec(args.graph)
    except SpecError as exc:
        return _err(str(exc))
    try:
        rep = analyze(g, CHECKS, args.cap, enumerate_pairs=not args.no_enum, detail=True)
    except ValueError as exc:
        return _err(str(exc))
    rep = {"graph6": emit_graph6(g), **rep}
    print(json.dumps(rep, sort_keys=True, indent=2))
    violated = any(v["status"] == VIOLATED for v in rep["verdicts"].values())
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        graphs = generate(args.spec, args.count, args.seed)
    except (SpecError, ValueError) as exc:
        return _err(str(exc))
    for g in graphs:
        sys.stdout.write(emit_graph6(g) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"scan": cmd_scan, "inspect": cmd_inspect, "generate": cmd_generate}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
