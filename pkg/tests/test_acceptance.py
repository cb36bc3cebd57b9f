"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

The lines are collected in ``RESULTS`` and printed in the terminal summary by
``conftest.py``; run with ``-s`` to also see them inline.
"""

import json
import random
import time

import pytest

from chordbip.chordality import (
    find_chordless_cycle_ge6,
    find_peeo,
    is_bisimplicial,
    is_chordal_bipartite,
    oracle_is_chordal_bipartite,
    verify_peeo,
)
from chordbip.connectivity import vertex_connectivity
from chordbip.constructions import (
    FIGURE4_EDGE,
    FIGURE4_V,
    complete_bipartite,
    cycle,
    extremal_even,
    extremal_odd,
    figure4_graph,
    grid,
)
from chordbip.graph import eliminate_edge, parse_graph6, remove_vertices
from chordbip.search import (
    bipartite_classes,
    canonical_form,
    chordal_bipartite_classes,
    conjecture_table,
    enumerate_min_size,
)
from chordbip.verify import (
    PreconditionError,
    Status,
    check_lemma6,
    check_proof_claims,
    sweep_lemma5,
    theorem_bound,
)

from conftest import random_bipartite, random_cb_corpus

RESULTS: list[str] = []
MINUTES = 60.0


def report(number, title, ok, elapsed, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}  {title}  [{elapsed:.3f} s]"
    if detail:
        line += f"  {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def dumps(obj):
    return json.dumps(obj, sort_keys=True)


# --- shared, computed once per worker count -------------------------------------------------

_cache: dict = {}


def class_corpus(jobs):
    """Chordal bipartite classes with κ >= 1 and n <= 8, from the enumerator."""
    key = ("classes", jobs)
    if key not in _cache:
        _cache[key] = [s for n in range(2, 9) for s in chordal_bipartite_classes(n, jobs=jobs)]
    return _cache[key]


def random_corpus():
    if "random" not in _cache:
        _cache["random"] = random_cb_corpus(1000, seed=2024)
    return _cache["random"]


def sweep_corpus(jobs):
    return [parse_graph6(s) for s in class_corpus(jobs)] + random_corpus()


def criterion3_json(jobs):
    return dumps([enumerate_min_size(n, 2, jobs=jobs).to_json() for n in range(4, 10)])


def lemma6_json(jobs):
    return dumps([check_lemma6(g).to_json() for g in sweep_corpus(jobs)])


def lemma5_json(jobs):
    return dumps([sweep_lemma5(g).to_json() for g in sweep_corpus(jobs)])


def criterion10_json(jobs):
    return dumps([r.to_json() for r in conjecture_table(3, range(6, 11), jobs=jobs)])


# --- criteria --------------------------------------------------------------------------------

def test_criterion_01_bound_values():
    t = time.perf_counter()
    values = [theorem_bound(n) for n in range(4, 10)]
    dt = time.perf_counter() - t
    ok = values == [4, 6, 7, 9, 10, 12] and dt < 1e-3
    assert report(1, "bound values for n = 4..9", ok, dt, str(values))


def test_criterion_02_tightness():
    t = time.perf_counter()
    bad = []
    for n in range(4, 21):
        if n % 2 == 0:
            g, m = extremal_even(n).graph, 3 * n // 2 - 2
        elif n >= 5:
            g, m = extremal_odd(n).graph, (3 * n - 3) // 2
        else:
            continue
        if not (g.n == n and is_chordal_bipartite(g) and vertex_connectivity(g) == 2
                and g.m == m):
            bad.append(n)
    dt = time.perf_counter() - t
    ok = not bad and dt < 5
    assert report(2, "extremal constructions are tight for n <= 20", ok, dt,
                  f"failing n: {bad}" if bad else "")


def test_criterion_03_exhaustive_minimum():
    t = time.perf_counter()
    out = criterion3_json(1)
    dt = time.perf_counter() - t
    _cache[("c3", 1)] = out
    recs = json.loads(out)
    mins = {r["n"]: r["m_min"] for r in recs}
    ok = all(mins[n] == theorem_bound(n) for n in range(4, 10))
    ok &= recs[0]["witnesses"] == [canonical_form(cycle(4))]
    ok &= recs[1]["witnesses"] == [canonical_form(complete_bipartite(2, 3))]
    ok &= all(r["exhaustive"] and not r["truncated"] for r in recs)
    ok &= dt < 10 * MINUTES
    assert report(3, "exhaustive m_min equals the bound for n = 4..9", ok, dt,
                  f"m_min {[mins[n] for n in range(4, 10)]}")


def test_criterion_04_lemma6_sweep():
    t = time.perf_counter()
    out = lemma6_json(1)
    dt = time.perf_counter() - t
    _cache[("c4", 1)] = out
    verdicts = json.loads(out)
    fails = [v for v in verdicts if v["status"] == "fail"]
    ok = not fails and dt < 10 * MINUTES
    assert report(4, "κ(G ⊖ uv) >= κ(G) - 1 over the corpus", ok, dt,
                  f"{len(verdicts)} graphs, "
                  f"{sum(v['instances'] for v in verdicts)} edges, {len(fails)} violations")


def test_criterion_05_lemma5_sweep():
    t = time.perf_counter()
    out = lemma5_json(1)
    dt = time.perf_counter() - t
    _cache[("c5", 1)] = out
    verdicts = json.loads(out)
    fails = [v for v in verdicts if v["status"] == "fail"]
    ok = not fails and dt < 10 * MINUTES
    assert report(5, "all five elimination items hold for every cut up to κ", ok, dt,
                  f"{sum(v['instances'] for v in verdicts)} (edge, cut) pairs, "
                  f"{len(fails)} violations")


def test_criterion_06_proof_claims():
    t = time.perf_counter()
    counts = {"pass": 0, "vacuous": 0, "fail": 0}
    for n in range(4, 9):
        for s in chordal_bipartite_classes(n, kappa=2):
            try:
                counts[check_proof_claims(parse_graph6(s)).status.value] += 1
            except PreconditionError:
                # κ >= 3: outside the κ = 2 case the claims describe
                counts["vacuous"] += 1
    dt = time.perf_counter() - t
    ok = counts["fail"] == 0 and counts["pass"] > 0
    assert report(6, "internal claims on 2-connected classes with n <= 8", ok, dt,
                  str(counts))


def test_criterion_07_figure4_certificate():
    t = time.perf_counter()
    g = figure4_graph().graph
    facts = {
        "chordal_bipartite": is_chordal_bipartite(g),
        "kappa": vertex_connectivity(g),
        "bisimplicial": is_bisimplicial(g, FIGURE4_EDGE),
        "kappa_eliminated": vertex_connectivity(eliminate_edge(g, FIGURE4_EDGE)),
        "kappa_minus_v": vertex_connectivity(remove_vertices(g, 1 << FIGURE4_V)),
    }
    dt = time.perf_counter() - t
    ok = facts == {"chordal_bipartite": True, "kappa": 3, "bisimplicial": True,
                   "kappa_eliminated": 2, "kappa_minus_v": 2} and dt < 1
    assert report(7, "figure4 graph certificate", ok, dt, str(facts))


def test_criterion_08_recognizer_oracle():
    t = time.perf_counter()
    disagree = []
    classes = 0
    for n in range(1, 8):
        for s in bipartite_classes(n, kappa=0 if n == 1 else 1):
            g = parse_graph6(s)
            classes += 1
            if is_chordal_bipartite(g) != oracle_is_chordal_bipartite(g):
                disagree.append(s)
    rng = random.Random(8)
    for _ in range(10_000):
        g = random_bipartite(rng, rng.randint(8, 12))
        if is_chordal_bipartite(g) != oracle_is_chordal_bipartite(g):
            disagree.append(g)
    dt = time.perf_counter() - t
    ok = not disagree
    assert report(8, "recognizer agrees with the cycle-enumeration oracle", ok, dt,
                  f"{classes} classes + 10000 random, {len(disagree)} disagreements")


def test_criterion_09_peeo_suite():
    t = time.perf_counter()
    failures = 0
    for g in sweep_corpus(1):
        order = find_peeo(g, "greedy")
        if order is None or not verify_peeo(g, order):
            failures += 1
    c6_none = find_peeo(cycle(6), "backtracking") is None
    hole = find_chordless_cycle_ge6(grid(3, 3))
    rejected = not is_chordal_bipartite(grid(3, 3)) and hole is not None and len(hole) == 8
    dt = time.perf_counter() - t
    ok = failures == 0 and c6_none and rejected
    assert report(9, "elimination orders on the corpus, C6 and grid(3,3)", ok, dt,
                  f"greedy failures {failures}, C6 none {c6_none}, 8-cycle {hole}")


def test_criterion_10_conjecture_table():
    t = time.perf_counter()
    out = criterion10_json(1)
    dt = time.perf_counter() - t
    _cache[("c10", 1)] = out
    rows = json.loads(out)
    ok = [r["n"] for r in rows] == list(range(6, 11))
    ok &= all(r["mode"] in ("exhaustive", "sampled") for r in rows)
    row10 = rows[-1]
    ok &= row10["m_min"] is not None and row10["m_min"] <= figure4_graph().graph.m
    for r in rows:
        for w in r["witnesses"]:
            g = parse_graph6(w)
            ok &= (g.n == r["n"] and g.m == r["m_min"] and is_chordal_bipartite(g)
                   and vertex_connectivity(g) >= 3)
    assert report(10, "κ >= 3 minimum sizes for n = 6..10", ok, dt,
                  f"m_min {[r['m_min'] for r in rows]}")


def test_criterion_11_determinism():
    t = time.perf_counter()
    producers = {"c3": criterion3_json, "c4": lemma6_json, "c5": lemma5_json,
                 "c10": criterion10_json}
    differing = []
    for name, fn in producers.items():
        one = _cache.get((name, 1)) or fn(1)
        if fn(8) != one:
            differing.append(name)
    dt = time.perf_counter() - t
    ok = not differing
    assert report(11, "byte-identical JSON for 1 and 8 workers", ok, dt,
                  f"differing: {differing}" if differing else "criteria 3, 4, 5, 10")
