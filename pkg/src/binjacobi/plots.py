"""Figures written next to the CSV / text reports."""

from __future__ import annotations

import math
from collections import defaultdict
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from binjacobi.harness import BenchRow, StatsReport, WorstCaseRow  # noqa: E402

_STYLE = {"fast": "o-", "oracle": "s--", "quadratic": "^:", "cubic": "v-."}


def _figure(width=6.0, height=None):
    if height is None:
        height = width * (math.sqrt(5) - 1.0) / 2.0
    fig, ax = plt.subplots(figsize=(width, height))
    ax.grid(True, which="both", alpha=0.3)
    return fig, ax


def _save(fig, path) -> Path:
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_bench(rows: Iterable[BenchRow], path) -> Path:
    """Log-log running time against operand size, one line per algorithm."""
    series = defaultdict(list)
    for r in rows:
        series[r.alg].append((r.bits, r.time_ns / 1e6))
    fig, ax = _figure()
    for alg, pts in sorted(series.items()):
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts], _STYLE.get(alg, "x-"), label=alg)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("operand size (bits)")
    ax.set_ylabel("time (ms)")
    ax.legend()
    return _save(fig, path)


def plot_worst_cases(rows: Sequence[WorstCaseRow], path, alg: str = "cubic") -> Path:
    fig, ax = _figure()
    ax.plot([r.n for r in rows], [r.max_iters for r in rows], "o-")
    ax.set_xlabel("n  (max(a, b) < 2^n)")
    ax.set_ylabel("max iterations")
    ax.set_title(f"worst cases, {alg}")
    return _save(fig, path)


def plot_class_fractions(report: StatsReport, path) -> Path:
    fr = report.fractions()
    fig, ax = _figure()
    names = list(fr)
    ax.bar(names, [100 * fr[n] for n in names], color="0.6", edgecolor="k")
    for i, n in enumerate(names):
        ax.text(i, 100 * fr[n] + 0.5, f"{100 * fr[n]:.2f}%", ha="center")
    ax.set_ylabel("share of iterations (%)")
    ax.set_title(f"{report.alg}, {report.calls} pairs of {report.bits} bits")
    return _save(fig, path)
