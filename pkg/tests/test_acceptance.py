"""Exit criteria for the package. Each test records one PASS/FAIL line.

Set TOPOINDEX_OCTANE_CSV to a CSV with columns id,edges,entropy,acentric_factor
(octane isomer data) to run the literature-value correlation check.
"""

import os
import random
import time
from fractions import Fraction


from oracles import prufer_dedup_codes, naive_tree_code, random_tree_edges
from topoindex.chem import correlate, load_dataset, pearson
from topoindex.enumeration import enumerate_free_trees, make_path, make_star
from topoindex.graph import SimpleGraph, canonical_code
from topoindex.indices import BUILTINS, IndexSpec, evaluate_index, ha_index, phi_ha
from topoindex.mean_dsl import eval_phi, parse_phi
from topoindex.verify import (
    run_theorem,
    verify_connected_min,
    verify_molecular_min,
    verify_phi_monotone,
    verify_tree_extremes,
)

WORKERS = int(os.environ.get("TOPOINDEX_WORKERS", "1"))


def _failed(reports):
    return [f"n={r.n}: {'; '.join(r.failures())}" for r in reports if not r.passed]


def test_criterion_01_closed_form_extremes(criterion):
    start = time.perf_counter()
    bad = [
        n
        for n in range(4, 51)
        if ha_index(make_star(n)) != 4 * (1 - Fraction(1, n)) ** 2
        or ha_index(make_path(n)) != n - Fraction(11, 9)
    ]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    criterion(1, ok, f"star/path closed forms n=4..50, mismatches={bad}, {elapsed:.3f}s")
    assert ok


def test_criterion_02_tree_extremes(criterion):
    start = time.perf_counter()
    reports = [verify_tree_extremes(n, workers=WORKERS) for n in range(4, 19)]
    elapsed = time.perf_counter() - start
    fails = _failed(reports)
    ok = not fails and elapsed < 600
    criterion(2, ok, f"unique S_n min / P_n max over all trees n=4..18, {sum(r.scanned for r in reports)} trees, {elapsed:.1f}s {fails}")
    assert ok


def test_criterion_03_molecular_minimum(criterion):
    start = time.perf_counter()
    reports = [verify_molecular_min(n, workers=WORKERS) for n in range(6, 19)]
    elapsed = time.perf_counter() - start
    fails = _failed(reports)
    for r in reports:
        if r.n not in (6, 7, 10):
            offset = {0: Fraction(4, 225), 1: Fraction(8, 225), 2: Fraction(0)}[r.n % 3]
            if r.min_value != Fraction(19 * r.n - 31, 25) + offset:
                fails.append(f"n={r.n}: min {r.min_value}")
            if not r.checks.get("minimizers_equal_family"):
                fails.append(f"n={r.n}: minimiser set differs from family")
    n10 = reports[10 - 6]
    if n10.expected.get("gamma_of_minimizer") != Fraction(927, 4900) or n10.residuals["gamma_of_minimizer"] != 0:
        fails.append("n=10 gamma")
    if n10.counts["minimizers"] != 1:
        fails.append("n=10 not unique")
    ok = not fails and elapsed < 600
    criterion(3, ok, f"molecular minimum n=6..18 (mod-3 cases, exceptions 6/7/10), {elapsed:.1f}s {fails}")
    assert ok


def test_criterion_04_reduction_identity(criterion):
    reports = run_theorem("identity", 2, 18, workers=WORKERS)
    bad = {r.n: r.counts["violations"] for r in reports if r.counts["violations"]}
    scanned = sum(r.scanned for r in reports)
    ok = not bad
    criterion(4, ok, f"HA == (19n-31)/25 + Gamma over {scanned} molecular trees n=2..18, violations by order: {bad}")
    assert ok


def test_criterion_05_gamma_lemma(criterion):
    reports = run_theorem("gamma-lemma", 2, 18, workers=WORKERS)
    violations = sum(r.counts["violations"] for r in reports)
    hits = sum(r.counts["hypothesis_holds"] for r in reports)
    ok = violations == 0 and all(r.passed for r in reports)
    criterion(5, ok, f"Gamma > 8/225 under either hypothesis: {hits} trees checked, {violations} violations")
    assert ok


def test_criterion_06_phi_monotone_and_edge_bounds(criterion):
    rng = random.Random(20240601)
    pts = {Fraction(1), Fraction(1000)}
    while len(pts) < 10_000:
        q = rng.randint(1, 1000)
        p = rng.randint(q, 1000 * q)
        pts.add(Fraction(p, q))
    rep = verify_phi_monotone(sorted(pts))
    edge_bad = 0
    for a in range(1, 201):
        for b in range(1, 201):
            v = phi_ha(a, b)
            if not (0 < v <= 1 and (v == 1) == (a == b)):
                edge_bad += 1
    ok = rep.passed and rep.scanned == 10_000 and edge_bad == 0
    criterion(6, ok, f"Phi strictly decreasing on {rep.scanned} rationals in [1,1000]; edge-bound failures on pairs<=200: {edge_bad}")
    assert ok


def test_criterion_07_connected_minimum(criterion):
    start = time.perf_counter()
    reports = [verify_connected_min(n) for n in range(4, 8)]
    elapsed = time.perf_counter() - start
    fails = _failed(reports)
    ok = not fails and elapsed < 300
    criterion(7, ok, f"S_n unique least HA over connected graphs n=4..7 ({sum(r.scanned for r in reports)} graphs), HA=|E| iff balanced, {elapsed:.1f}s {fails}")
    assert ok


def test_criterion_08_enumeration(criterion):
    problems = []
    for max_degree in (None, 4):
        for n in range(1, 10):
            got = {naive_tree_code(t.n, list(t.edges())) for t in enumerate_free_trees(n, max_degree)}
            count = sum(1 for _ in enumerate_free_trees(n, max_degree))
            want = prufer_dedup_codes(n, max_degree)
            if got != want or count != len(want):
                problems.append((n, max_degree, count, len(want)))
        for n in range(1, 15):
            codes = [canonical_code(t) for t in enumerate_free_trees(n, max_degree)]
            if len(codes) != len(set(codes)):
                problems.append(("dup", n, max_degree))
    ok = not problems
    criterion(8, ok, f"generator == Prufer-dedup oracle n=1..9 (all, max degree 4); no duplicate codes n<=14; problems={problems}")
    assert ok


def test_criterion_09_dsl_equivalence(criterion):
    ha_expr = parse_phi("H/A")
    pair_bad = sum(
        1 for a in range(1, 101) for b in range(1, 101) if eval_phi(ha_expr, a, b) != phi_ha(a, b)
    )
    rng = random.Random(99)
    spec = IndexSpec.from_phi("H/A")
    tree_bad = 0
    for _ in range(1000):
        n = rng.randint(1, 30)
        t = SimpleGraph.from_edges(n, random_tree_edges(n, rng))
        if evaluate_index(t, spec) != ha_index(t):
            tree_bad += 1
    sdd = IndexSpec.from_phi("4*(A/H) - 2")
    sdd_bad = 0
    sdd_trees = 0
    for n in range(1, 11):
        for t in enumerate_free_trees(n):
            sdd_trees += 1
            d = t.degrees
            want = sum((Fraction(d[u], d[v]) + Fraction(d[v], d[u]) for u, v in t.edges()), Fraction(0))
            if evaluate_index(t, sdd) != want:
                sdd_bad += 1
    ok = pair_bad == tree_bad == sdd_bad == 0
    criterion(9, ok, f"H/A == HA on 10^4 pairs and 1000 random trees; 4*(A/H)-2 == SDD on {sdd_trees} trees; mismatches {pair_bad}/{tree_bad}/{sdd_bad}")
    assert ok


def test_criterion_10_octane_correlations(criterion):
    path = os.environ.get("TOPOINDEX_OCTANE_CSV")
    if path:
        ds = load_dataset(path, kind="alkane")
        _, r_s = correlate(ds, BUILTINS["HA"], "entropy")
        _, r_w = correlate(ds, BUILTINS["HA"], "acentric_factor")
        ok = abs(r_s - 0.91) <= 0.02 and abs(r_w - 0.92) <= 0.02
        criterion(10, ok, f"octane data ({len(ds.rows)} rows): |r| entropy={r_s:.3f}, acentric={r_w:.3f}")
        assert ok
        return
    rng = random.Random(10)
    ok = True
    for _ in range(200):
        xs = [rng.uniform(-50, 50) for _ in range(18)]
        ys = [rng.uniform(-50, 50) for _ in range(18)]
        a, b = rng.uniform(0.1, 10), rng.uniform(-20, 20)
        r = pearson(xs, ys)
        ok &= abs(pearson(ys, xs) - r) < 1e-12
        ok &= abs(pearson([a * x + b for x in xs], ys) - r) < 1e-9
        ok &= abs(pearson([-a * x + b for x in xs], ys) + r) < 1e-9
        ok &= abs(pearson(xs, xs) - 1.0) < 1e-12
    criterion(10, bool(ok), "no octane CSV supplied: Pearson symmetry, affine invariance, self-correlation suite")
    assert ok
