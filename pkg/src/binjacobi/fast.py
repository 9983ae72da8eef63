"""Subquadratic binary Jacobi: a half-gcd style recursion that returns a 2x2
transform matrix, and the driver loop built on top of it.

A transform (r11, r12, r21, r22, j) stands for the map
(a, b) -> 2^(-2j) (r11 a + r12 b, r21 a + r22 b).
"""

from __future__ import annotations

from typing import NamedTuple, Tuple

from binjacobi.bindiv import low_quotient
from binjacobi.core import _SQ, INF, InternalError, InvalidInput, check_pair, nu

BASECASE_BITS = 64
K_DIVISOR = 3


class TransformMatrix(NamedTuple):
    r11: int
    r12: int
    r21: int
    r22: int
    j: int = 0

    def det(self) -> int:
        return self.r11 * self.r22 - self.r12 * self.r21


IDENTITY = TransformMatrix(1, 0, 0, 1, 0)


class HalfResult(NamedTuple):
    s: int
    j: int
    R: TransformMatrix


def mat_apply(R: TransformMatrix, a: int, b: int) -> Tuple[int, int]:
    r11, r12, r21, r22, j = R
    if not j:
        return r11 * a + r12 * b, r21 * a + r22 * b
    x = r11 * a + r12 * b
    y = r21 * a + r22 * b
    mask = (1 << (2 * j)) - 1
    if x & mask or y & mask:
        raise InternalError(f"transform with scale 2^-{2 * j} is inexact on ({a}, {b})")
    return x >> (2 * j), y >> (2 * j)


def mat_mul(S: TransformMatrix, Q: TransformMatrix) -> TransformMatrix:
    """The product S x Q (apply Q first); scale exponents add."""
    return TransformMatrix(*_mul(S, Q))


def _mul(S, Q):
    s11, s12, s21, s22, sj = S
    q11, q12, q21, q22, qj = Q
    return (s11 * q11 + s12 * q21, s11 * q12 + s12 * q22,
            s21 * q11 + s22 * q21, s21 * q12 + s22 * q22, sj + qj)


def q_good_bad(j0: int, q: int) -> TransformMatrix:
    """4^j0 times the matrix of one good or bad iteration."""
    p = 1 << j0
    return TransformMatrix(0, p, p, q, j0)


def q_harmless(m: int) -> TransformMatrix:
    """4^m times the matrix of m consecutive ugly iterations."""
    if m < 1:
        raise InvalidInput(f"harmless run length must be >= 1, got {m}")
    p = 1 << (2 * m)
    sgn = -1 if m & 1 else 1
    r11, rem1 = divmod(p + 4 * sgn, 5)
    r12, rem2 = divmod(2 * (p - sgn), 5)
    r22, rem3 = divmod(4 * p + sgn, 5)
    if rem1 or rem2 or rem3:
        raise InternalError(f"inexact harmless matrix for m={m}")
    return TransformMatrix(r11, r12, r12, r22, m)


def _harmless_cut(a: int, bpp: int, budget: int) -> Tuple[int, int]:
    """(m, c) for an ugly run from (a, 2*bpp), cut to at most ``budget`` steps."""
    d = a - bpp
    if d:
        m = ((d & -d).bit_length() - 1) >> 1
        if m > budget:
            m = budget
    else:
        m = budget
    quarter = d >> (2 * m)
    if (quarter << (2 * m)) != d:
        raise InternalError(f"d={d} not divisible by 4^{m}")
    c, rem = divmod(d + quarter if m & 1 else d - quarter, 5)
    if rem:
        raise InternalError(f"inexact division by 5 for d={d}, m={m}")
    return m, c


def half_binary_jacobi_base(a: int, b: int, k: int, harmless: bool = False) -> HalfResult:
    """Iterative version of :func:`half_binary_jacobi` for small ``k``.

    Takes division steps one at a time while the accumulated exponent stays
    within ``k``. Ugly runs are stepped individually unless ``harmless`` is
    set, in which case they are consolidated exactly as in the recursion.
    """
    _check_half(a, b, k)
    s, j, R = _base(a, b, k, harmless)
    return HalfResult(s, j, TransformMatrix(*R))


def _base(a, b, k, harmless):
    mask = (1 << (2 * k + 2)) - 1
    a &= mask
    b &= mask
    sq = _SQ
    s = 0
    J = 0
    r11, r12, r21, r22 = 1, 0, 0, 1
    while b:
        j = (b & -b).bit_length() - 1
        if J + j > k:
            break
        bp = b >> j
        if j == 1:
            if not (a ^ bp) & 2:
                if harmless:
                    m, c = _harmless_cut(a, bp, k - J)
                    s ^= sq[a & 7]
                    if m & 1:
                        s ^= (a & 3) >> 1
                    a, b = a - 4 * c, b + 2 * c
                    s ^= sq[a & 7]
                    x11, x12, _, x22, _ = q_harmless(m)
                    r11, r12, r21, r22 = (x11 * r11 + x12 * r21, x11 * r12 + x12 * r22,
                                          x12 * r11 + x22 * r21, x12 * r12 + x22 * r22)
                    J += m
                    continue
                q = 3
            else:
                q = 1
            s ^= sq[a & 7] ^ sq[bp & 7] ^ ((a & 2 & bp) >> 1)
            a, b = bp, (a + q * bp) >> 1
            r11, r12, r21, r22 = r21 << 1, r22 << 1, (r11 << 1) + q * r21, (r12 << 1) + q * r22
            J += 1
        else:
            q = low_quotient(a, bp, j)
            s ^= (a & 2 & bp) >> 1
            if j & 1:
                s ^= sq[a & 7] ^ sq[bp & 7]
            a, b = bp, (a + q * bp) >> j
            r11, r12, r21, r22 = r21 << j, r22 << j, (r11 << j) + q * r21, (r12 << j) + q * r22
            J += j
    return s, J, (r11, r12, r21, r22, J)


def _base_apply(a, b, k, harmless):
    """Base case fused with applying its transform: the same budgeted steps
    as :func:`_base`, run on the untruncated pair, returning (s, c, d).

    Truncation does not change the step sequence within budget ``k``, so
    (c, d) equals 2^(-2J) R (a, b) for the (s, J, R) that ``_base`` returns.
    Unlike ``_base`` it stops at the fixed point (g, 2g), where further steps
    change nothing except the sign, and the sign only matters when g = 1.
    """
    sq = _SQ
    s = 0
    J = 0
    while True:
        j = (b & -b).bit_length() - 1
        if J + j > k:
            return s, a, b
        bp = b >> j
        if j == 1:
            if not (a ^ bp) & 2:
                if bp == a:
                    return s, a, b
                if harmless:
                    m, c = _harmless_cut(a, bp, k - J)
                    s ^= sq[a & 7]
                    if m & 1:
                        s ^= (a & 3) >> 1
                    a, b = a - 4 * c, b + 2 * c
                    s ^= sq[a & 7]
                    J += m
                    continue
                q = 3
            else:
                q = 1
            s ^= sq[a & 7] ^ sq[bp & 7] ^ ((a & 2 & bp) >> 1)
            a, b = bp, (a + q * bp) >> 1
            J += 1
        else:
            q = low_quotient(a, bp, j)
            s ^= (a & 2 & bp) >> 1
            if j & 1:
                s ^= sq[a & 7] ^ sq[bp & 7]
            a, b = bp, (a + q * bp) >> j
            J += j


def _check_half(a, b, k):
    if a <= 0 or not a & 1:
        raise InvalidInput(f"a must be odd positive, got {a}")
    if b < 0 or b & 1:
        raise InvalidInput(f"b must be even and nonnegative, got {b}")
    if k < 0:
        raise InvalidInput(f"k must be nonnegative, got {k}")


def half_binary_jacobi(a: int, b: int, k: int, threshold: int = BASECASE_BITS,
                       base_harmless: bool = False) -> HalfResult:
    """Half-gcd style step: returns (s, j, R) such that, with
    (c, d) = 2^(-2j) R (a, b), (b|a) = (-1)^s (d|c) and
    nu(2^j c) <= k < nu(2^j d).

    Inputs are only read modulo 2^(2k+2). Below ``threshold`` bits
    (2k + 2 <= threshold) the iterative base case takes over; pass
    ``threshold=0`` to recurse all the way down.
    """
    _check_half(a, b, k)
    s, j, R = _half(a, b, k, threshold, base_harmless)
    return HalfResult(s, j, TransformMatrix(*R))


def _half(a, b, k, threshold, base_harmless):
    if not b or (b & -b).bit_length() - 1 > k:
        return 0, 0, IDENTITY
    if 2 * k + 2 <= threshold:
        return _base(a, b, k, base_harmless)

    k1 = k >> 1
    mask = (1 << (2 * k1 + 2)) - 1
    s1, j1, R = _half(a & mask, b & mask, k1, threshold, base_harmless)
    a1, b1 = mat_apply(R, a, b)
    if not b1:
        return s1, j1, R
    j0 = (b1 & -b1).bit_length() - 1
    if j0 + j1 > k:
        return s1, j1, R

    s0 = _SQ[a1 & 7] if j0 & 1 else 0
    bpp = b1 >> j0
    q = low_quotient(a1, bpp, j0)
    if j0 == 1 and q == 3:
        m, c = _harmless_cut(a1, bpp, k - j1)
        if m & 1:
            s0 ^= (a1 & 3) >> 1
        a2, b2 = a1 - 4 * c, (bpp + c) << 1
        Q = q_harmless(m)
    else:
        s0 ^= (a1 & 2 & bpp) >> 1
        a2, b2 = bpp, (a1 + q * bpp) >> j0
        Q = q_good_bad(j0, q)
        m = j0
    if j0 & 1:
        s0 ^= _SQ[a2 & 7]

    k2 = k - (m + j1)
    mask = (1 << (2 * k2 + 2)) - 1
    s2, j2, S = _half(a2 & mask, b2 & mask, k2, threshold, base_harmless)
    return s0 ^ s1 ^ s2, j1 + j2 + m, _mul(_mul(S, Q), R)


def fast_run(a: int, b: int, threshold: int = BASECASE_BITS, k_divisor: int = K_DIVISOR,
             base_harmless: bool = False) -> Tuple[int, int]:
    """Driver loop; returns ``(symbol, number_of_half_steps)``."""
    check_pair(a, b)
    s = 0
    n = 0
    j = (b & -b).bit_length() - 1
    while b != a << j:
        k = b.bit_length() // k_divisor
        if k < j:
            k = j
        if 2 * k + 2 <= threshold:
            # below the threshold a bigger budget is free: one pass instead of several
            s1, a, b = _base_apply(a, b, max(k, (threshold - 2) >> 1), base_harmless)
        else:
            s1, _, R = _half(a, b, k, threshold, base_harmless)
            a, b = mat_apply(R, a, b)
        s ^= s1
        j = (b & -b).bit_length() - 1
        n += 1
    return (-1 if s else 1) if a == 1 else 0, n


def fast_binary_jacobi(a: int, b: int, threshold: int = BASECASE_BITS,
                       k_divisor: int = K_DIVISOR) -> int:
    """(b|a) for odd positive ``a`` and even positive ``b`` in O(M(n) log n)."""
    return fast_run(a, b, threshold, k_divisor)[0]
