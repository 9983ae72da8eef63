"""The iterative binary Jacobi algorithm with optional per-iteration tracing.

A *sink* is any callable ``sink(cls, j, q, m, a, b)``; it is invoked once per
loop iteration with the state (a, b) *before* the iteration is applied.
``m`` is the number of ugly steps a harmless iteration stands for (0 for
good, bad and plain ugly records).
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, List, NamedTuple, Optional, Tuple

from binjacobi.bindiv import IterClass, low_quotient
from binjacobi.core import _SQ, InternalError, check_pair

Sink = Callable[[IterClass, int, int, int, int, int], None]

GOOD, BAD, UGLY, HARMLESS = IterClass.GOOD, IterClass.BAD, IterClass.UGLY, IterClass.HARMLESS


class IterRecord(NamedTuple):
    index: int
    cls: IterClass
    j: int
    q: int
    m: int
    bits_a: int
    bits_b: int
    a_mod8: int
    b_mod8: int

    def line(self) -> str:
        return f"{self.index} {self.cls.value} {self.j} {self.q} {self.bits_a} {self.bits_b}"


class TraceRecorder:
    """Sink collecting IterRecords, and optionally the full (a, b) states."""

    def __init__(self, keep_states: bool = False):
        self.records: List[IterRecord] = []
        self.states: List[Tuple[int, int]] = []
        self.keep_states = keep_states

    def __call__(self, cls, j, q, m, a, b):
        self.records.append(IterRecord(len(self.records), cls, j, q, m,
                                       a.bit_length(), b.bit_length(), a & 7, b & 7))
        if self.keep_states:
            self.states.append((a, b))


class ClassCounter(Counter):
    """Sink counting iterations per class."""

    def __call__(self, cls, j, q, m, a, b):
        self[cls] += 1


def _iteration_limit(a: int, b: int) -> int:
    return 10 * max(a.bit_length(), b.bit_length()) + 10


def cubic_run(a: int, b: int, sink: Optional[Sink] = None) -> Tuple[int, int]:
    """Run the cubic loop; returns ``(symbol, iteration_count)``."""
    check_pair(a, b)
    limit = _iteration_limit(a, b)
    sq = _SQ
    s = 0
    n = 0
    j = (b & -b).bit_length() - 1
    while b != a << j:
        bp = b >> j
        if j == 1:
            q = 3 if not (a ^ bp) & 2 else 1
            if sink is not None:
                sink(UGLY if q == 3 else BAD, j, q, 0, a, b)
            s ^= sq[a & 7] ^ sq[bp & 7]
        else:
            q = low_quotient(a, bp, j)
            if sink is not None:
                sink(GOOD, j, q, 0, a, b)
            if j & 1:
                s ^= sq[a & 7] ^ sq[bp & 7]
        s ^= (a & 2 & bp) >> 1
        a, b = bp, (a + q * bp) >> j
        j = (b & -b).bit_length() - 1
        n += 1
        if __debug__ and n > limit:
            raise InternalError(f"cubic loop exceeded {limit} iterations")
    return (-1 if s else 1) if a == 1 else 0, n


def cubic_binary_jacobi(a: int, b: int, sink: Optional[Sink] = None) -> int:
    """(b|a) for odd positive ``a`` and even positive ``b``."""
    return cubic_run(a, b, sink)[0]


def cubic_trace(a: int, b: int) -> Tuple[int, List[IterRecord]]:
    rec = TraceRecorder()
    value = cubic_run(a, b, rec)[0]
    return value, rec.records
