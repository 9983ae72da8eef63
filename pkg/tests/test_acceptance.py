"""Exit criteria. Each test records one PASS/FAIL line, shown in the pytest
terminal summary under "acceptance criteria".

Run alone with:  pytest tests/test_acceptance.py
"""

import random
import time

import pytest

from binjacobi.core import jacobi_oracle, nu
from binjacobi.cubic import cubic_run
from binjacobi.fast import fast_run, half_binary_jacobi, mat_apply
from binjacobi.harness import estimate_drift, run_bench, run_exhaustive_search, run_sample_stats
from binjacobi.quadratic import quadratic_run
from conftest import ACCEPTANCE_LINES, rand_pair
from step_invariants import check_cubic_steps, check_quadratic_matches_cubic, check_ugly_runs, cubic_states

pytestmark = pytest.mark.slow


def record(n, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_1_differential_10_bits():
    t0 = time.perf_counter()
    mismatches = 0
    pairs = 0
    for a in range(1, 1 << 10, 2):
        for b in range(2, 1 << 10, 2):
            ref = jacobi_oracle(b, a)
            if cubic_run(a, b)[0] != ref or quadratic_run(a, b)[0] != ref or fast_run(a, b)[0] != ref:
                mismatches += 1
            pairs += 1
    dt = time.perf_counter() - t0
    record(1, mismatches == 0 and dt < 10.0,
           f"{pairs} pairs, {mismatches} mismatches, {dt:.2f}s (limit 10s)")


def test_2_worst_case_spot_checks():
    expected = [(7, 30, 6), (549, 802, 19), (23449, 19250, 34), (656227, 352966, 48),
                (15548029, 66067306, 64)]
    t0 = time.perf_counter()
    got = [cubic_run(a, b)[1] for a, b, _ in expected]
    dt = time.perf_counter() - t0
    record(2, got == [e[2] for e in expected] and dt < 1.0,
           f"iterations {got}, {dt * 1000:.1f}ms (limit 1s)")


def test_3_exhaustive_worst_cases():
    t0 = time.perf_counter()
    rows = run_exhaustive_search(10, "cubic")
    dt = time.perf_counter() - t0
    r5, r10 = rows[4], rows[9]
    ok = r5.max_iters == 6 and r10.max_iters == 19 and dt < 5.0
    record(3, ok, f"n=5 max {r5.max_iters} at ({r5.a},{r5.b}); n=10 max {r10.max_iters} "
                  f"at ({r10.a},{r10.b}); {dt:.2f}s (limit 5s)")


def test_4_quadratic_worst_case_and_linear_bound():
    t0 = time.perf_counter()
    worst = quadratic_run(933531, 869894)[1]
    rng = random.Random(4)
    excess = {}
    for n in (64, 256, 1024):
        bound = 4.43 * n + 10
        top = 0
        for _ in range(10_000):
            top = max(top, quadratic_run(*rand_pair(rng, n))[1])
        excess[n] = (top, bound)
    dt = time.perf_counter() - t0
    ok = worst == 37 and all(t <= bd for t, bd in excess.values()) and dt < 60.0
    detail = ", ".join(f"n={n}: max {t} <= {bd:.0f}" for n, (t, bd) in excess.items())
    record(4, ok, f"(933531,869894) -> {worst} iterations; {detail}; {dt:.1f}s (limit 60s)")


def test_5_distribution_statistics():
    t0 = time.perf_counter()
    cubic = run_sample_stats(60, 10**6, seed=2009, alg="cubic")
    quad = run_sample_stats(60, 10**6, seed=2009, alg="quadratic")
    dt = time.perf_counter() - t0
    fc = [100 * v for v in cubic.fractions().values()]
    fq = [100 * v for v in quad.fractions().values()]
    ok = (all(abs(x - y) <= 1.0 for x, y in zip(fc, (50.54, 25.14, 24.31)))
          and all(abs(x - y) <= 1.0 for x, y in zip(fq, (53.70, 26.71, 19.59)))
          and abs(cubic.mean_iters - 42.72) <= 0.5
          and abs(quad.mean_iters - 40.21) <= 0.5
          and dt < 600)
    record(5, ok, "cubic %.2f/%.2f/%.2f mean %.2f; quadratic %.2f/%.2f/%.2f mean %.2f; %.0fs (limit 600s)"
           % (*fc, cubic.mean_iters, *fq, quad.mean_iters, dt))


def test_6_half_step_contract():
    t0 = time.perf_counter()
    rng = random.Random(6)
    failures = []
    for i in range(10_000):
        bits = int(2 ** rng.uniform(3, 12))
        a, b = rand_pair(rng, bits)
        k = rng.randrange(0, bits + 1)
        s, j, R = half_binary_jacobi(a, b, k)
        c, d = mat_apply(R, a, b)
        if jacobi_oracle(b, a) != (-1) ** s * jacobi_oracle(d, c):
            failures.append(("symbol", a, b, k))
        if not (nu(c) + j <= k and (d == 0 or k < nu(d) + j)):
            failures.append(("valuation", a, b, k))
        mask = (1 << (2 * k + 2)) - 1
        if half_binary_jacobi(a & mask, b & mask, k) != (s, j, R):
            failures.append(("truncation", a, b, k))
    dt = time.perf_counter() - t0
    record(6, not failures and dt < 300,
           f"10000 triples over 8-4096 bits, {len(failures)} failures, {dt:.1f}s (limit 300s)")


def test_7_step_invariants():
    t0 = time.perf_counter()
    rng = random.Random(7)
    failures = []
    steps = 0
    for _ in range(10_000):
        a, b = rand_pair(rng, 256)
        records, states = cubic_states(a, b)
        steps += len(records)
        failures += check_cubic_steps(records, states)
        failures += check_ugly_runs(records, states)
        failures += check_quadratic_matches_cubic(a, b)
    dt = time.perf_counter() - t0
    record(7, not failures, f"10000 runs at 256 bits, {steps} steps, {len(failures)} failures, {dt:.1f}s")


def test_8_drift():
    t0 = time.perf_counter()
    drift = estimate_drift(10**5, 20, seed=8)
    dt = time.perf_counter() - t0
    rel = abs(drift - 1.348) / 1.348
    record(8, rel <= 0.02 and dt < 120,
           f"{drift:.4f} bits/iteration (target 1.348 +/- 2%, off by {100 * rel:.2f}%), "
           f"{dt:.1f}s (limit 120s)")


def test_9_asymptotic_crossover():
    rows = run_bench([10**5, 10**6], ["fast", "oracle", "quadratic"], seed=9)
    t = {(r.alg, r.bits): r.time_ns for r in rows}
    big = 10**6
    faster = t["fast", big] < t["quadratic", big] and t["fast", big] < t["oracle", big]
    ratio_small = t["fast", 10**5] / t["oracle", 10**5]
    ratio_big = t["fast", big] / t["oracle", big]
    improvement = ratio_small / ratio_big
    record(9, faster and improvement >= 2.0,
           "at 1e6 bits fast %.2fs, oracle %.2fs, quadratic %.2fs; fast/oracle %.3f -> %.3f (%.1fx)"
           % (t["fast", big] / 1e9, t["oracle", big] / 1e9, t["quadratic", big] / 1e9,
              ratio_small, ratio_big, improvement))
