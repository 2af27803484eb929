"""Acceptance criteria, one test each. Every test prints a single PASS/FAIL line."""

from __future__ import annotations

import io
import json
import math
import os
import random

import pytest

from longest_intersect import harness
from longest_intersect.census import CENSUS_COUNTS, open_census
from longest_intersect.connectivity import fan, is_k_connected, vertex_connectivity
from longest_intersect.generators import (complete, complete_bipartite, cycle, gen_gnp, gen_random_connected,
                                          gen_random_k_connected, hypercube, path, petersen)
from longest_intersect.graph import Graph
from longest_intersect.graph6 import emit_graph6
from longest_intersect.intersect import (CHEN_CONSTANT, bound_cycles, bound_paths, cycle_threshold,
                                         path_threshold)
from longest_intersect.longest import circumference, longest_path_length
from longest_intersect.reduction import verify_reduction
from oracles import longest_cycles, min_pair_intersection

RESULTS: dict[str, str] = {}
WORKERS = os.cpu_count() or 1
PETERSEN_CYCLE_MIN = 8   # golden value, brute force below


def report(number: int, name: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[f"{number}"] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def sweep() -> list[dict]:
    out = io.StringIO()
    with open_census() as fh:
        harness.scan(fh, out, ("conjectures", "dirac", "separator", "proofkit"), workers=WORKERS)
    return [json.loads(line) for line in out.getvalue().splitlines()]


def _violated(rec: dict, prefix: str) -> list[str]:
    return [k for k, v in rec["verdicts"].items() if k.startswith(prefix) and v["status"] == "violated"]


def test_1_exhaustive_sweep(sweep):
    failures, checked = [], 0
    assert len(sweep) == sum(CENSUS_COUNTS.values())
    for rec in sweep:
        n, k = rec["n"], rec["kappa"]
        cyc, pth = rec["pairs"]["cycle"], rec["pairs"]["path"]
        if rec["status"] != "ok" or rec["truncated"]["cycle"] or rec["truncated"]["path"]:
            failures.append((rec["graph6"], "not fully evaluated"))
            continue
        if k >= 1:
            checked += 1
            if pth["min_intersection"] < bound_paths(n, k):
                failures.append((rec["graph6"], "path bound"))
            if k <= 6 and pth["min_intersection"] < k:
                failures.append((rec["graph6"], "path >= k"))
        if k >= 2:
            if cyc["min_intersection"] < bound_cycles(n, k):
                failures.append((rec["graph6"], "cycle bound"))
            if k <= 7 and cyc["min_intersection"] < k:
                failures.append((rec["graph6"], "cycle >= k"))
        if _violated(rec, "cycle_") or _violated(rec, "path_"):
            failures.append((rec["graph6"], "harness verdict"))
    report(1, "exhaustive sweep n<=8", not failures,
           f"{len(sweep)} graphs, {checked} connected checked, failures={failures[:3]}")


NAMED = [petersen(), complete(2), complete(3), complete(5), complete(6), cycle(3), cycle(7), path(2), path(6),
         complete_bipartite(2, 3), complete_bipartite(3, 3), hypercube(3)]


def test_2_reduction_suite():
    graphs = list(NAMED)
    for seed in range(200):
        rng = random.Random(seed)
        graphs.append(gen_random_connected(rng.randint(2, 10), rng.uniform(0.1, 0.6), seed))
    failures = []
    for g in graphs:
        rep = verify_reduction(g)
        bad = [name for name, v in rep.verdicts().items() if v.status != "holds"]
        if bad or rep.kappa_cone != rep.kappa + 1:
            failures.append((emit_graph6(g), bad))
    report(2, "reduction suite", not failures, f"{len(graphs)} graphs, failures={failures[:3]}")


def test_3_dirac_suite(sweep):
    applicable = [r for r in sweep if r["kappa"] >= 2]
    failures = [r["graph6"] for r in applicable if r["verdicts"]["dirac"]["status"] != "holds"]
    ok_reference = all(r["circumference"] >= min(2 * r["min_degree"], r["n"]) for r in applicable)
    report(3, "dirac suite", not failures and ok_reference,
           f"{len(applicable)} 2-connected graphs, failures={failures[:3]}")


def test_4_fan_suite():
    failures = []
    for seed in range(100):
        rng = random.Random(seed)
        n = rng.randint(4, 14)
        k = rng.randint(1, min(5, n - 2))
        g = gen_random_k_connected(n, k, seed)
        v = rng.randrange(n)
        S = rng.sample([x for x in range(n) if x != v], rng.randint(k, n - 1))
        system = fan(g, v, S, k)
        if len(system) != k or system.violations(g) or not set(system.ends) <= set(S):
            failures.append(seed)
    report(4, "fan lemma suite", not failures, f"100 instances, failures={failures}")


def test_5_separator_suite(sweep):
    ranged = [r for r in sweep if 3 <= r["kappa"] <= 7]
    failures = [r["graph6"] for r in ranged if r["verdicts"]["separator"]["status"] == "violated"]
    applicable = sum(r["verdicts"]["separator"]["status"] == "holds" for r in ranged)
    report(5, "separator suite", not failures,
           f"{len(ranged)} graphs with 3<=kappa<=7, {applicable} with applicable pairs, failures={failures[:3]}")


def satellite_graph(seed: int) -> Graph:
    """Random 3-connected core plus extra vertices joined to 3 core vertices each.

    Adding a vertex with 3 neighbours keeps a graph 3-connected, and a large
    set of such satellites usually rules out a Hamiltonian cycle, which is
    what makes the claim checker applicable.
    """
    rng = random.Random(seed)
    m = rng.randint(4, 7)
    t = rng.randint(3, 12 - m)
    core = gen_random_k_connected(m, 3, rng.getrandbits(32))
    edges = core.edges()
    for i in range(t):
        edges += [(m + i, u) for u in rng.sample(range(m), 3)]
    g = Graph.from_edges(m + t, edges)
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_6_proofkit_suite(sweep):
    records = list(sweep)
    extra = [petersen()] + [satellite_graph(s) for s in range(50)]
    assert all(is_k_connected(g, 3) and g.n <= 12 for g in extra[1:])
    for g in extra:
        records.append(dict(harness.analyze(g, ("proofkit",), enumerate_pairs=False), graph6=emit_graph6(g)))
    failures = [(r["graph6"], _violated(r, "proofkit.")) for r in records if _violated(r, "proofkit.")]
    inconclusive = [r["graph6"] for r in records
                    if any(v["status"] == "inconclusive" for k, v in r["verdicts"].items() if k.startswith("proofkit."))]
    pairs = sum(r["proofkit"]["pairs"] for r in records)
    rewired = sum(r["verdicts"]["proofkit.rewirings"]["status"] == "holds" for r in records)
    report(6, "proofkit suite", not failures and not inconclusive,
           f"{len(records)} graphs, {pairs} cycle pairs, {rewired} graphs with validated rewirings, "
           f"failures={failures[:3]}")


def test_7_constants():
    problems = []
    if not 0.2614 <= CHEN_CONSTANT <= 0.2616:
        problems.append(CHEN_CONSTANT)
    for n in range(3, 201):
        for k in range(2, n):
            if (bound_cycles(n, k) == k) != (k >= math.ceil((n + 16) / 7)) or cycle_threshold(n) != math.ceil((n + 16) / 7):
                problems.append(("cycle", n, k))
            if (bound_paths(n, k) == k) != (k >= math.ceil((n + 9) / 7)) or path_threshold(n) != math.ceil((n + 9) / 7):
                problems.append(("path", n, k))
    report(7, "constants", not problems, f"c={CHEN_CONSTANT:.5f}, problems={problems[:3]}")


def test_8_petersen_golden(tmp_path):
    g = petersen()
    _, cycles = longest_cycles(g)
    brute_min = min_pair_intersection(cycles)
    src = tmp_path / "petersen.g6"
    src.write_text(emit_graph6(g) + "\n")
    outs = []
    for workers in (1, 8, 1):
        dst = tmp_path / f"out{len(outs)}.jsonl"
        code = harness.main(["scan", "--checks", "all", "--workers", str(workers), "--out", str(dst), str(src)])
        assert code == 0
        outs.append(dst.read_bytes())
    rec = json.loads(outs[0])
    ok = (rec["kappa"] == 3 and rec["circumference"] == 9 and rec["longest_path"] == 9
          and rec["pairs"]["cycle"]["min_intersection"] >= 3
          and rec["pairs"]["cycle"]["min_intersection"] == brute_min == PETERSEN_CYCLE_MIN
          and outs[0] == outs[1] == outs[2])
    report(8, "petersen golden record", ok,
           f"kappa={rec['kappa']} circ={rec['circumference']} lp={rec['longest_path']} "
           f"cycle_min={rec['pairs']['cycle']['min_intersection']} brute={brute_min} "
           f"identical={outs[0] == outs[1] == outs[2]}")


def test_9_solver_cross_validation():
    disagreements = []
    for seed in range(500):
        rng = random.Random(seed)
        g = gen_gnp(rng.randint(1, 14), rng.uniform(0.05, 0.7), seed)
        for fn in (longest_path_length, circumference):
            if fn(g, backend="dp") != fn(g, backend="bnb"):
                disagreements.append((seed, fn.__name__))
    report(9, "dp vs branch and bound", not disagreements, f"500 graphs, disagreements={disagreements}")
