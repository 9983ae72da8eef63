"""Binary division with positive quotient and iteration classes."""

from __future__ import annotations

import enum
from typing import NamedTuple

from binjacobi.core import INF, InternalError, InvalidInput, nu


class IterClass(str, enum.Enum):
    GOOD = "good"
    BAD = "bad"
    UGLY = "ugly"
    HARMLESS = "harmless"

    def __str__(self):
        return self.value


class BinaryDivision(NamedTuple):
    q: int
    r: int
    j: int


def inverse_mod_pow2(x: int, k: int) -> int:
    """Inverse of odd ``x`` modulo 2**k by Newton/Hensel lifting.

    Only the low ``k`` bits of ``x`` are read. Every odd x is its own inverse
    mod 8, and each step y <- y(2 - xy) doubles the number of correct bits.
    """
    if not x & 1:
        raise InvalidInput(f"{x} is not invertible modulo a power of two")
    mask = (1 << k) - 1
    x &= mask
    y = x
    bits = 3
    while bits < k:
        y = (y * (2 - x * y)) & mask
        bits <<= 1
    return y & mask


# inverses modulo 2^8 of the odd residues, indexed by x & 255
_INV8 = tuple(inverse_mod_pow2(x, 8) if x & 1 else 0 for x in range(256))


def low_quotient(a: int, bp: int, j: int) -> int:
    """-a / bp mod 2**(j+1) for odd a, bp, touching only their low j+1 bits."""
    if j == 1:
        return 3 if not (a ^ bp) & 2 else 1
    mask = (2 << j) - 1
    if j < 8:
        return (-(a & mask) * _INV8[bp & 255]) & mask
    return (-(a & mask) * inverse_mod_pow2(bp, j + 1)) & mask


def binary_divide_pos(a: int, b: int) -> BinaryDivision:
    """Binary division of ``a`` by ``b`` with an odd positive quotient.

    Requires nu(a) = 0 < nu(b) = j < INF. Returns (q, r, j) with q odd,
    0 < q < 2**(j+1), r = a + q*b/2**j and nu(r) > j.
    """
    if a < 0 or not a & 1:
        raise InvalidInput(f"a must be odd and nonnegative, got {a}")
    j = nu(b)
    if j is INF or j == 0 or b < 0:
        raise InvalidInput(f"b must be even and positive, got {b}")
    bp = b >> j
    q = low_quotient(a, bp, j)
    r = a + q * bp
    if r & ((2 << j) - 1):
        raise InternalError(f"binary division left nu(r) <= {j} for a={a}, b={b}")
    return BinaryDivision(q, r, j)


def classify(j: int, q: int) -> IterClass:
    if j >= 2:
        return IterClass.GOOD
    if j == 1 and q == 1:
        return IterClass.BAD
    if j == 1 and q == 3:
        return IterClass.UGLY
    raise InvalidInput(f"(j, q) = ({j}, {q}) is not a binary division outcome")
