"""Acceptance criteria, one test per criterion.  Each test records a
PASS/FAIL line that is echoed in the terminal summary."""

import json
import random
import time

import pytest

from clawtrace.errors import InternalStuck
from clawtrace.generators import random_graph
from clawtrace.graph import is_connected
from clawtrace.harness import SweepConfig, verify_counterexamples, verify_theorems
from clawtrace.engine import deficit, is_path, lift
from clawtrace.oracle import nontraceability_certificate, traceable_backtrack, traceable_dp, verify_certificate

from test_engine import random_o_path

FULL = SweepConfig(exhaustive_max_n=7, sample_count=10_000, sample_min_n=8, sample_max_n=14, seed=42)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}


def verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


@pytest.fixture(scope="module")
def full_sweep():
    t0 = time.perf_counter()
    reports = verify_theorems([5, 7, 8], FULL)
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="module")
def counterexamples():
    return verify_counterexamples()


def test_criterion_1_lift(acceptance):
    rng = random.Random(20240101)
    t0 = time.perf_counter()
    bad, stuck, gaps, cases, total_gaps = 0, 0, 0, 0, 0
    while cases < 10_000:
        n = rng.randint(2, 14)
        p = rng.uniform(0.5, 1.0)
        g = random_graph(n, p, rng)
        if not is_connected(g):
            continue
        cases += 1
        seq = random_o_path(g, rng, gap_bias=0.5 if cases % 2 else 0.0)
        d0 = deficit(g, seq)
        gaps += d0 > 0
        total_gaps += d0
        trace = []
        try:
            out = lift(g, seq, trace)
        except InternalStuck:
            stuck += 1
            continue
        if not (is_path(g, out) and set(seq) <= set(out) and len(trace) <= d0):
            bad += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and stuck == 0 and elapsed < 60
    acceptance(f"[{verdict(ok)}] criterion 1: lift on {cases} relaxed paths ({gaps} with gaps, {total_gaps} gaps in all): "
               f"{bad} invalid, {stuck} stuck, {elapsed:.1f} s (< 60 s)")
    assert ok


def test_criterion_2_theorem5(acceptance, full_sweep):
    reports, elapsed = full_sweep
    rep = reports[5]
    pops = {n: c.population for n, c in rep.by_order.items()}
    t = rep.totals
    ok = (pops == CONNECTED_COUNTS and rep.passed and t.violations == t.unresolved == t.oracle_disagreements == 0
          and elapsed < 600)
    ex = sum(c.certified for c in rep.by_order.values())
    acceptance(f"[{verdict(ok)}] criterion 2: theorem 5 over {sum(pops.values())} connected graphs n <= 7: "
               f"{ex} certified, all solved with oracle agreement; one-pass sweep {elapsed:.0f} s (< 600 s)")
    assert ok


@pytest.mark.parametrize("theorem", [7, 8])
def test_criterion_3_theorems_7_8(acceptance, full_sweep, theorem):
    reports, _ = full_sweep
    rep = reports[theorem]
    ex = sum(c.certified for c in rep.by_order.values())
    s = rep.sampled
    ok = rep.passed and s.population == 10_000 and {n: c.population for n, c in rep.by_order.items()} == CONNECTED_COUNTS
    acceptance(f"[{verdict(ok)}] criterion 3: theorem {theorem}: {ex} certified of n <= 7, "
               f"{s.certified} certified of 10000 samples n in [8,14]; failures {rep.totals.failures}")
    assert ok


def _claims(report, prefixes, exclude=()):
    return [c for c in report.claims if c.id.startswith(prefixes) and not c.id.startswith(exclude)]


@pytest.mark.parametrize(
    "number, prefixes, exclude",
    [(4, ("g1.",), ("g1.o",)), (5, ("g2.",), ("g2.o",)), (6, ("k35.",), ()), (7, ("g1.o", "g2.o"), ())],
)
def test_criteria_4_to_7(acceptance, counterexamples, number, prefixes, exclude):
    claims = _claims(counterexamples, prefixes, exclude)
    failed = [c.id for c in claims if not c.passed]
    ok = bool(claims) and not failed
    acceptance(f"[{verdict(ok)}] criterion {number}: {len(claims)} claims "
               f"({', '.join(c.id for c in claims)}); failed: {failed or 'none'}")
    assert ok


def test_criterion_8_oracle(acceptance):
    rng = random.Random(8)
    disagree, certs, bad_certs = 0, 0, 0
    for _ in range(1000):
        g = random_graph(rng.randint(1, 12), rng.uniform(0.15, 0.8), rng)
        dp = traceable_dp(g).traceable
        if dp != (traceable_backtrack(g) is not None):
            disagree += 1
        cert = nontraceability_certificate(g)
        if cert is not None:
            certs += 1
            if not verify_certificate(g, cert) or dp:
                bad_certs += 1
    ok = disagree == 0 and bad_certs == 0
    acceptance(f"[{verdict(ok)}] criterion 8: DP vs backtracking on 1000 graphs: {disagree} disagreements; "
               f"{certs} certificates, {bad_certs} failed re-verification")
    assert ok


def test_criterion_9_determinism(acceptance, full_sweep, counterexamples):
    reports, _ = full_sweep
    again = verify_theorems([5, 7, 8], FULL)
    same = all(
        json.dumps(reports[t].to_json(), sort_keys=True) == json.dumps(again[t].to_json(), sort_keys=True)
        for t in (5, 7, 8)
    )
    ce_same = json.dumps(counterexamples.to_json()) == json.dumps(verify_counterexamples().to_json())
    ok = same and ce_same
    acceptance(f"[{verdict(ok)}] criterion 9: repeated full sweeps (theorems 5, 7, 8) and counterexample "
               f"checklist produce byte-identical JSON")
    assert ok
