"""Binary Jacobi with maximal runs of ugly iterations collapsed into one
harmless iteration, which bounds the iteration count linearly in the input
size."""

from __future__ import annotations

from typing import List, NamedTuple, Optional, Tuple

from binjacobi.bindiv import low_quotient
from binjacobi.core import _SQ, INF, InternalError, InvalidInput, check_pair, nu
from binjacobi.cubic import (BAD, GOOD, HARMLESS, IterRecord, Sink, TraceRecorder,
                             _iteration_limit)


class HarmlessStep(NamedTuple):
    d: int
    m: int
    c: int


def harmless_params(a: int, b_pp: int, m_cap: Optional[int] = None) -> HarmlessStep:
    """Closed form for a run of ugly iterations starting at odd ``a`` and
    odd ``b_pp`` = b/2.

    d = a - b_pp, m = nu(d) div 2 (optionally capped), and
    c = (d - (-1)^m d/4^m)/5, so that the run ends at (a - 4c, b + 2c).
    d may be negative; all divisions are exact.
    """
    if not a & 1 or not b_pp & 1:
        raise InvalidInput("harmless step needs odd a and odd b/2")
    d = a - b_pp
    if d & 3:
        raise InvalidInput(f"state (a={a}, b/2={b_pp}) is not ugly")
    v = nu(d)
    if v is INF:
        if m_cap is None:
            raise InvalidInput("a = b/2: the ugly run never ends")
        m = m_cap
    else:
        m = v >> 1 if m_cap is None else min(v >> 1, m_cap)
    quarter = d >> (2 * m)
    c, rem = divmod(d + quarter if m & 1 else d - quarter, 5)
    if rem or (quarter << (2 * m)) != d:
        raise InternalError(f"inexact division in harmless step for d={d}, m={m}")
    return HarmlessStep(d, m, c)


def quadratic_run(a: int, b: int, sink: Optional[Sink] = None) -> Tuple[int, int]:
    """Run the quadratic loop; returns ``(symbol, iteration_count)``."""
    check_pair(a, b)
    limit = _iteration_limit(a, b)
    sq = _SQ
    s = 0
    n = 0
    j = (b & -b).bit_length() - 1
    while b != a << j:
        bp = b >> j
        if j == 1:
            s ^= sq[a & 7]
            if not (a ^ bp) & 2:
                # ugly: replace the whole run by one harmless iteration
                d = a - bp
                m = ((d & -d).bit_length() - 1) >> 1
                quarter = d >> (2 * m)
                c, rem = divmod(d + quarter if m & 1 else d - quarter, 5)
                if rem:
                    raise InternalError(f"inexact division by 5 for d={d}")
                if sink is not None:
                    sink(HARMLESS, 1, 3, m, a, b)
                if m & 1:
                    s ^= (a & 3) >> 1
                a, b = a - 4 * c, b + 2 * c
            else:
                if sink is not None:
                    sink(BAD, 1, 1, 0, a, b)
                s ^= (a & 2 & bp) >> 1
                a, b = bp, (a + bp) >> 1
            s ^= sq[a & 7]
        else:
            q = low_quotient(a, bp, j)
            if sink is not None:
                sink(GOOD, j, q, 0, a, b)
            s ^= (a & 2 & bp) >> 1
            if j & 1:
                s ^= sq[a & 7] ^ sq[bp & 7]
            a, b = bp, (a + q * bp) >> j
        j = (b & -b).bit_length() - 1
        n += 1
        if __debug__ and n > limit:
            raise InternalError(f"quadratic loop exceeded {limit} iterations")
    return (-1 if s else 1) if a == 1 else 0, n


def quadratic_binary_jacobi(a: int, b: int, sink: Optional[Sink] = None) -> int:
    """(b|a) for odd positive ``a`` and even positive ``b``."""
    return quadratic_run(a, b, sink)[0]


def quadratic_trace(a: int, b: int) -> Tuple[int, List[IterRecord]]:
    rec = TraceRecorder()
    value = quadratic_run(a, b, rec)[0]
    return value, rec.records
