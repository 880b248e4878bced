"""Acceptance criteria, one test per criterion."""
import itertools
import random
import time

import pytest

from cistkit import oracle
from cistkit.cist import (
    cist_from_bipanchromatic,
    cist_to_coloring,
    find_cist_partition,
    max_cist_exact,
    search_cist_trees,
    uniform_dominating_obstruction,
    verify_cist,
)
from cistkit.colorings import (
    bipanchromatic_number,
    exists_bipanchromatic,
    exists_panchromatic,
    is_panchromatic,
    min_unique_colors,
    panchromatic_number,
)
from cistkit.harness import run_conjecture_grid
from cistkit.lpexport import (
    brute_force_optimum,
    export_alpha_lp,
    export_bipanchromatic_lp,
    export_panchromatic_lp,
    parse_lp,
)
from cistkit.model import Hypergraph, SplitGraph, hypergraph_of_split, split_of_hypergraph
from cistkit.reductions import build_bicp_gadget, build_cist_gadget

from conftest import seeded_hypergraphs, seeded_split_graphs
from test_lpexport import GOLDEN, INSTANCES

pytestmark = pytest.mark.acceptance

# boundary goldens for chi_p2 <= M <= chi_p2 + 1, found by search
LOWER_GOLDEN = Hypergraph(6, [[2, 3, 5], [1, 2], [0, 3], [2, 4]])
UPPER_GOLDEN = Hypergraph(7, [list(range(7))])


def _constructive_instances():
    out = []
    for h in seeded_hypergraphs(2000, (4, 10), (1, 8), base=10_000):
        k, c = bipanchromatic_number(h)
        if k >= 2:
            out.append((split_of_hypergraph(h), k, c))
        if len(out) == 220:
            break
    return out


@pytest.fixture(scope="module")
def constructive():
    return _constructive_instances()


def test_criterion_1_oracle_equivalence(acceptance_log):
    suite = seeded_hypergraphs(520, (1, 7), (1, 8))
    start = time.perf_counter()
    mismatches = []
    for h in suite:
        ref = oracle.brute_numbers(h)
        got = [panchromatic_number(h)[0]]
        want = [ref.chi_p]
        if h.n >= 2:
            got.append(bipanchromatic_number(h)[0])
            want.append(ref.chi_p2)
        got += [min_unique_colors(h, k)[0] for k in sorted(ref.alpha)]
        want += [ref.alpha[k] for k in sorted(ref.alpha)]
        if got != want:
            mismatches.append(h)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed <= 60
    acceptance_log("1 oracle equivalence", ok,
                   f"{len(suite)} hypergraphs, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_2_constructive_soundness(constructive, acceptance_log):
    failures = 0
    for g, k, c in constructive:
        cert = cist_from_bipanchromatic(g, c)
        if cert.k != k or not verify_cist(g, cert):
            failures += 1
    ok = len(constructive) >= 200 and failures == 0 and all(g.d >= 4 for g, _, _ in constructive)
    acceptance_log("2 constructive soundness", ok, f"{len(constructive)} instances, {failures} failures")
    assert ok


def test_criterion_3_bound_sandwich(acceptance_log):
    suite = seeded_split_graphs(160, (2, 8), (1, 6), base=20_000, max_order=12)
    suite += [split_of_hypergraph(LOWER_GOLDEN), split_of_hypergraph(UPPER_GOLDEN)]
    hits = {"lower": 0, "upper": 0}
    outside = 0
    for g in suite:
        h = hypergraph_of_split(g)
        chi2 = bipanchromatic_number(h)[0]
        m = max_cist_exact(g)
        if not chi2 <= m <= chi2 + 1:
            outside += 1
        hits["lower" if m == chi2 else "upper"] += 1
    golden_lower = max_cist_exact(split_of_hypergraph(LOWER_GOLDEN)) == bipanchromatic_number(LOWER_GOLDEN)[0] == 2
    golden_upper = max_cist_exact(split_of_hypergraph(UPPER_GOLDEN)) == bipanchromatic_number(UPPER_GOLDEN)[0] + 1 == 4
    ok = outside == 0 and golden_lower and golden_upper and all(g.order <= 12 for g in suite) and len(suite) >= 150
    acceptance_log("3 bound sandwich", ok,
                   f"{len(suite)} split graphs, {outside} outside, M=chi_p2 x{hits['lower']}, M=chi_p2+1 x{hits['upper']}")
    assert ok


def test_criterion_4_trees_to_coloring(constructive, acceptance_log):
    bad = 0
    for g, k, c in constructive:
        back = cist_to_coloring(g, cist_from_bipanchromatic(g, c))
        if not is_panchromatic(hypergraph_of_split(g), back):
            bad += 1
    ok = bad == 0
    acceptance_log("4 trees to panchromatic coloring", ok, f"{len(constructive)} certificates, {bad} failures")
    assert ok


def _all_small_hypergraphs(max_n=4, max_m=3):
    """Every normalized labelled hypergraph with n <= max_n, m <= max_m
    (hyperedges as a multiset)."""
    out = []
    for n in range(1, max_n + 1):
        subsets = [s for r in range(1, n + 1) for s in itertools.combinations(range(n), r)]
        for m in range(1, max_m + 1):
            for edges in itertools.combinations_with_replacement(subsets, m):
                if set().union(*edges) == set(range(n)):
                    out.append(Hypergraph(n, [list(e) for e in edges]))
    return out


def test_criterion_5_reduction_equivalences(acceptance_log):
    start = time.perf_counter()
    suite = _all_small_hypergraphs()
    mismatches = 0
    checks = 0
    for h in suite:
        h_prime = build_bicp_gadget(h).h_prime
        m = max_cist_exact(build_cist_gadget(h).g_prime)
        for k in range(1, h.n + 1):
            pan = exists_panchromatic(h, k) is not None
            bi = exists_bipanchromatic(h_prime, k) is not None
            checks += 2
            mismatches += (pan != bi) + (pan != (m >= k))
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and len(suite) >= 100 and elapsed <= 120
    acceptance_log("5 reduction equivalences", ok,
                   f"{len(suite)} hypergraphs, {checks} checks, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def _obstruction_instances():
    out = []
    rng = random.Random(8)
    while len(out) < 40:
        k = rng.randint(2, 4)
        n = rng.randint(k + 1, 7)
        m = rng.randint(1, 5)
        hub = rng.randrange(n)
        rest = [v for v in range(n) if v != hub]
        rows = [sorted([hub] + rng.sample(rest, k - 1)) for _ in range(m)]
        covered = set().union(*rows)
        for v in range(n):
            if v not in covered:
                rows.append(sorted([hub] + [v] + rng.sample([u for u in rest if u != v], k - 2)))
        if len(rows) + n > 14:
            continue
        out.append((SplitGraph(n, rows), k))
    return out


def test_criterion_6_obstruction(acceptance_log):
    fired = 0
    exceptions = 0
    for g, k in _obstruction_instances():
        if uniform_dominating_obstruction(g, k) is None:
            continue
        fired += 1
        if max_cist_exact(g) >= k:
            exceptions += 1
    ok = fired >= 30 and exceptions == 0
    acceptance_log("6 uniform dominating obstruction", ok, f"{fired} instances, {exceptions} exceptions")
    assert ok


def test_criterion_7_conjecture_grid(acceptance_log, tmp_path):
    start = time.perf_counter()
    result = run_conjecture_grid(range(4, 9), range(-1, 5), 20, seed=2024, out_dir=tmp_path)
    elapsed = time.perf_counter() - start
    s = result.summary
    violations_ok = all(cx.confirmed for cx in result.counterexamples)
    holds_all = s["eq3_violations"] == 0
    ok = (holds_all or violations_ok) and elapsed <= 600 and s["instances"] == 600
    acceptance_log("7 conjecture grid", ok,
                   f"{s['instances']} instances, {s['eq3_holds']} hold, "
                   f"{s['eq3_violations']} violations, {elapsed:.1f}s")
    assert ok


def test_criterion_8_lp_export(acceptance_log):
    golden_ok = True
    values_ok = True
    for name, h in INSTANCES.items():
        chi = panchromatic_number(h)[0]
        models = {
            "pan": (export_panchromatic_lp(h), chi),
            "bipan": (export_bipanchromatic_lp(h, chi), bipanchromatic_number(h)[0]),
            "alpha": (export_alpha_lp(h, chi), min_unique_colors(h, chi)[0]),
        }
        for kind, (text, want) in models.items():
            golden_ok &= text.encode() == (GOLDEN / f"{name}.{kind}.lp").read_bytes()
            values_ok &= brute_force_optimum(parse_lp(text))[0] == want
    ok = golden_ok and values_ok
    acceptance_log("8 LP export", ok, f"goldens match: {golden_ok}, brute-force optima match: {values_ok}")
    assert ok


def test_criterion_9_trees_vs_partitions(acceptance_log):
    suite = seeded_split_graphs(150, (2, 7), (1, 6), base=30_000, max_order=10)
    disagreements = 0
    start = time.perf_counter()
    for g in suite:
        for k in (2, 3):
            trees = search_cist_trees(g, k)
            part = find_cist_partition(g, k)
            if (trees is None) != (part is None):
                disagreements += 1
            if trees is not None and not verify_cist(g, trees):
                disagreements += 1
    elapsed = time.perf_counter() - start
    ok = disagreements == 0
    acceptance_log("9 tree search vs partition search", ok,
                   f"{len(suite)} graphs x k in (2, 3), {disagreements} disagreements, {elapsed:.1f}s")
    assert ok
