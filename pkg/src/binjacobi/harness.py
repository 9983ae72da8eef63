"""Iteration statistics, exhaustive worst-case search, drift estimation and
timing benchmarks.

Sampling is split into fixed-size chunks, each with its own seeded
substream, so results depend only on the seed and never on the number of
worker processes.
"""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

from binjacobi.core import InvalidInput, jacobi_oracle
from binjacobi.cubic import ClassCounter, cubic_run
from binjacobi.fast import fast_run
from binjacobi.quadratic import quadratic_run

SEARCH_CAP = 13
CHUNK = 10_000
BENCH_HEADER = ("alg", "bits", "iterations", "time_ns")

_RUNNERS = {"cubic": cubic_run, "quadratic": quadratic_run, "fast": fast_run}
_TITLES = {"cubic": "CubicBinaryJacobi", "quadratic": "QuadraticBinaryJacobi",
           "fast": "FastBinaryJacobi", "oracle": "Oracle"}
_CLASSES = {"cubic": ("good", "bad", "ugly"), "quadratic": ("good", "bad", "harmless")}


def _runner(alg: str):
    try:
        return _RUNNERS[alg]
    except KeyError:
        raise InvalidInput(f"algorithm {alg!r} does not report iteration counts; "
                           f"choose from {sorted(_RUNNERS)}") from None


def _map(fn, jobs: Sequence[tuple], workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


# ---------------------------------------------------------------- statistics

@dataclass
class StatsReport:
    alg: str
    bits: int = 0
    seed: int = 0
    calls: int = 0
    total_iters: int = 0
    counts: Dict[str, int] = field(default_factory=dict)
    max_iters: int = -1
    witness: Optional[Tuple[int, int]] = None

    @property
    def mean_iters(self) -> float:
        return self.total_iters / self.calls if self.calls else 0.0

    def fractions(self) -> Dict[str, float]:
        tot = self.total_iters or 1
        return {name: self.counts.get(name, 0) / tot for name in _CLASSES[self.alg]}

    def merge(self, other: "StatsReport") -> "StatsReport":
        counts = dict(self.counts)
        for name, c in other.counts.items():
            counts[name] = counts.get(name, 0) + c
        best = max((self.max_iters, _neg_key(self.witness)), (other.max_iters, _neg_key(other.witness)))
        witness = self.witness if best == (self.max_iters, _neg_key(self.witness)) else other.witness
        return StatsReport(self.alg, self.bits, self.seed, self.calls + other.calls,
                           self.total_iters + other.total_iters, counts, best[0], witness)

    def format(self) -> str:
        names = _CLASSES[self.alg]
        fr = self.fractions()
        lines = [
            _TITLES[self.alg],
            f"trials {self.calls} with {self.bits}-bit numbers, seed {self.seed}",
        ]
        if self.witness is not None:
            lines.append(f"maxits {self.max_iters} for a {self.witness[0]}, b {self.witness[1]}")
        lines += [
            "Cumulative counts",
            f" total {self.total_iters}, " + ", ".join(f"{n} {self.counts.get(n, 0)}" for n in names),
            f"Percentages ({', '.join(names)}): " + ", ".join(f"{100 * fr[n]:.2f}" for n in names),
            f"Mean iterations per call  {self.mean_iters:.2f}",
        ]
        return "\n".join(lines) + "\n"


def _neg_key(w):
    # larger is better in max(); ties prefer the lexicographically smaller pair
    return (0, 0) if w is None else (-w[0], -w[1])


def random_pair(rng: random.Random, bits: int) -> Tuple[int, int]:
    """a odd in [1, 2^bits), b even in [2, 2^bits), both uniform."""
    a = (rng.getrandbits(bits - 1) << 1) | 1
    v = 0
    while not v:
        v = rng.getrandbits(bits - 1)
    return a, v << 1


def _chunk_rng(tag: str, seed: int, index: int) -> random.Random:
    return random.Random(f"binjacobi/{tag}/{seed}/{index}")


def _stats_chunk(alg: str, bits: int, seed: int, index: int, count: int) -> StatsReport:
    rng = _chunk_rng("stats", seed, index)
    run = _runner(alg)
    counter = ClassCounter()
    total = 0
    best = -1
    witness = None
    for _ in range(count):
        a, b = random_pair(rng, bits)
        n = run(a, b, counter)[1]
        total += n
        if n > best or (n == best and (a, b) < witness):
            best, witness = n, (a, b)
    return StatsReport(alg, bits, seed, count, total,
                       {cls.value: c for cls, c in counter.items()}, best, witness)


def run_sample_stats(bits: int, count: int, seed: int, alg: str = "cubic",
                     workers: int = 1) -> StatsReport:
    """Aggregate iteration classes over ``count`` seeded random pairs."""
    if alg not in _CLASSES:
        raise InvalidInput("statistics are collected for cubic or quadratic only")
    if bits < 2:
        raise InvalidInput("bits must be at least 2")
    jobs = [(alg, bits, seed, i, min(CHUNK, count - start))
            for i, start in enumerate(range(0, count, CHUNK))]
    report = StatsReport(alg, bits, seed, counts={n: 0 for n in _CLASSES[alg]})
    for part in _map(_stats_chunk, jobs, workers):
        report = report.merge(part)
    return report


# -------------------------------------------------------- worst-case search

@dataclass(frozen=True)
class WorstCaseRow:
    n: int
    max_iters: int
    a: Optional[int]
    b: Optional[int]


def _search_chunk(alg: str, n_max: int, a_lo: int, a_hi: int) -> List[Tuple[int, Optional[Tuple[int, int]]]]:
    """Best (iterations, witness) per bucket n = bitlen(max(a, b)), a in [a_lo, a_hi)."""
    run = _runner(alg)
    best = [(-1, None)] * (n_max + 1)
    top = 1 << n_max
    for a in range(a_lo | 1, a_hi, 2):
        abits = a.bit_length()
        for b in range(2, top, 2):
            it = run(a, b)[1]
            n = max(abits, b.bit_length())
            if it > best[n][0]:
                best[n] = (it, (a, b))
    return best


def run_exhaustive_search(n_max: int, alg: str = "cubic", cap: int = SEARCH_CAP,
                          workers: int = 1) -> List[WorstCaseRow]:
    """Worst iteration counts over all admissible pairs with max(a, b) < 2^n,
    for n = 1..n_max. Ties go to the smallest a, then the smallest b."""
    if n_max > cap:
        raise InvalidInput(f"n_max={n_max} exceeds the search cap {cap}; raise the cap explicitly")
    if n_max < 1:
        raise InvalidInput("n_max must be at least 1")
    _runner(alg)
    step = max(2, (1 << n_max) // 16)
    jobs = [(alg, n_max, lo, min(lo + step, 1 << n_max)) for lo in range(0, 1 << n_max, step)]
    merged = [(-1, None)] * (n_max + 1)
    for part in _map(_search_chunk, jobs, workers):
        merged = [max(x, y, key=lambda t: (t[0], _neg_key(t[1]))) for x, y in zip(merged, part)]
    rows = []
    acc = (-1, None)
    for n in range(1, n_max + 1):
        acc = max(acc, merged[n], key=lambda t: (t[0], _neg_key(t[1])))
        if acc[1] is None:
            rows.append(WorstCaseRow(n, 0, None, None))
        else:
            rows.append(WorstCaseRow(n, acc[0], *acc[1]))
    return rows


def format_search(rows: Iterable[WorstCaseRow], alg: str = "cubic") -> str:
    out = [f"# worst cases for {_TITLES[alg]}, max(a,b) < 2^n", "n iterations a b"]
    for r in rows:
        out.append(f"{r.n} {r.max_iters} {'-' if r.a is None else r.a} {'-' if r.b is None else r.b}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------- drift

def random_pair_exact(rng: random.Random, bits: int) -> Tuple[int, int]:
    """a odd and b even, both with exactly ``bits`` bits."""
    top = 1 << (bits - 1)
    a = rng.getrandbits(bits) | top | 1
    b = (rng.getrandbits(bits) | top) & ~1
    return a, b


def estimate_drift(bits: int, trials: int, seed: int) -> float:
    """Mean number of input bits consumed per cubic iteration."""
    if trials <= 0:
        raise InvalidInput("drift estimate needs at least one trial")
    if bits < 8:
        raise InvalidInput("bits must be at least 8")
    total = 0.0
    for i in range(trials):
        a, b = random_pair_exact(_chunk_rng("drift", seed, i), bits)
        total += a.bit_length() / cubic_run(a, b)[1]
    return total / trials


# ------------------------------------------------------------------ benchmark

@dataclass(frozen=True)
class BenchRow:
    alg: str
    bits: int
    iterations: int
    time_ns: int


def _timed(alg: str, a: int, b: int) -> Tuple[int, int]:
    if alg == "oracle":
        t0 = time.perf_counter_ns()
        jacobi_oracle(b, a)
        return 0, time.perf_counter_ns() - t0
    run = _runner(alg)
    t0 = time.perf_counter_ns()
    n = run(a, b)[1]
    return n, time.perf_counter_ns() - t0


def run_bench(sizes: Sequence[int], algs: Sequence[str], seed: int = 1,
              repeats: int = 1, warmup: bool = True) -> List[BenchRow]:
    """Time every algorithm on one deterministic input pair per size.

    The reported time is the best of ``repeats`` runs. Warm-up runs each
    algorithm once on a small input before any measurement.
    """
    for alg in algs:
        if alg != "oracle":
            _runner(alg)
    if warmup:
        a, b = random_pair_exact(_chunk_rng("bench-warmup", seed, 0), 2048)
        for alg in algs:
            _timed(alg, a, b)
    rows = []
    for bits in sorted(set(sizes)):
        a, b = random_pair_exact(_chunk_rng("bench", seed, bits), bits)
        for alg in algs:
            best = None
            for _ in range(max(1, repeats)):
                n, t = _timed(alg, a, b)
                best = t if best is None else min(best, t)
            rows.append(BenchRow(alg, bits, n, max(1, best)))
    rows.sort(key=lambda r: (r.alg, r.bits))
    return rows


def write_bench_csv(rows: Iterable[BenchRow], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    w.writerow(BENCH_HEADER)
    for r in rows:
        w.writerow((r.alg, r.bits, r.iterations, r.time_ns))


def bench_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    write_bench_csv(rows, buf)
    return buf.getvalue()


def read_bench_csv(src: TextIO) -> List[BenchRow]:
    reader = csv.reader(src)
    header = next(reader, None)
    if tuple(header or ()) != BENCH_HEADER:
        raise InvalidInput(f"unexpected benchmark header {header}")
    return [BenchRow(alg, int(bits), int(it), int(t)) for alg, bits, it, t in reader]
