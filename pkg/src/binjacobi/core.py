"""2-adic helpers, sign-parity helpers, input normalization and the public
``jacobi`` entry point.

Everything works on plain Python ints. Parity helpers only look at the low
two or three bits of their arguments so they stay O(1) on huge operands.
"""

from __future__ import annotations

from typing import Optional, Tuple, Union


class InvalidInput(ValueError):
    """Raised when an operand violates a documented precondition."""


class InternalError(AssertionError):
    """An exactness or consistency check failed: this is a bug, not bad input."""


class _Infinity:
    """The valuation of zero. Compares above every int, supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("binjacobi.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Valuation = Union[int, _Infinity]

# (x^2 - 1)/8 mod 2 indexed by x mod 8 (even slots unused)
_SQ = (0, 0, 0, 1, 0, 1, 0, 0)


def nu(x: int) -> Valuation:
    """2-adic valuation of ``x``; ``INF`` when ``x == 0``."""
    if x == 0:
        return INF
    return (x & -x).bit_length() - 1


def _require_odd(*xs: int) -> None:
    for x in xs:
        if not x & 1:
            raise InvalidInput(f"expected an odd integer, got {x}")


def eps_square(a: int) -> int:
    """Exponent bit of (2|a), i.e. (a^2 - 1)/8 mod 2, read from a mod 8."""
    _require_odd(a)
    return _SQ[a & 7]


def eps_recip(a: int, b: int) -> int:
    """Exponent bit of the reciprocity sign, (a-1)(b-1)/4 mod 2."""
    _require_odd(a, b)
    return (a & 2 & b) >> 1


def eps_neg(a: int) -> int:
    """Exponent bit of (-1|a), i.e. (a - 1)/2 mod 2."""
    _require_odd(a)
    return (a & 3) >> 1


def check_modulus(a: int) -> None:
    if not isinstance(a, int) or isinstance(a, bool):
        raise InvalidInput(f"modulus must be an int, got {type(a).__name__}")
    if a <= 0 or not a & 1:
        raise InvalidInput(f"modulus must be odd positive, got {a}")


def check_pair(a: int, b: int) -> None:
    """Precondition shared by the binary algorithms: nu(a) = 0 < nu(b) < INF."""
    if a <= 0 or not a & 1:
        raise InvalidInput(f"a must be odd positive, got {a}")
    if b <= 0 or b & 1:
        raise InvalidInput(f"b must be even positive, got {b}")


def normalize(b: int, a: int) -> Tuple[Optional[int], int, int]:
    """Reduce (b|a) for arbitrary signed ``b`` to the even positive case.

    Returns ``(early, b_norm, s)``. If ``early`` is not None it is the final
    symbol value and the other fields are meaningless. Otherwise
    (b|a) = (-1)^s (b_norm|a) with b_norm even and positive.
    """
    check_modulus(a)
    if a == 1:
        return 1, 0, 0
    if b == 0:
        return 0, 0, 0
    s = 0
    if b < 0:
        s = eps_neg(a)
        b = -b
    if b & 1:
        b += a
    return None, b, s


def jacobi_oracle(b: int, a: int) -> int:
    """Jacobi symbol (b|a) by the classical remainder/reciprocity loop.

    Kept deliberately independent of the binary algorithms so that it can
    serve as the reference in differential tests.
    """
    check_modulus(a)
    b %= a
    result = 1
    while b:
        v = (b & -b).bit_length() - 1
        b >>= v
        if v & 1 and (a & 7) in (3, 5):
            result = -result
        a, b = b, a
        if (a & 3) == 3 and (b & 3) == 3:
            result = -result
        b %= a
    return result if a == 1 else 0


ALGORITHMS = ("cubic", "quadratic", "fast", "oracle")


def jacobi(b: int, a: int, alg: str = "fast") -> int:
    """Jacobi symbol (b|a) for any int ``b`` and odd positive ``a``."""
    if alg == "oracle":
        return jacobi_oracle(b, a)
    if alg == "cubic":
        from binjacobi.cubic import cubic_binary_jacobi as run
    elif alg == "quadratic":
        from binjacobi.quadratic import quadratic_binary_jacobi as run
    elif alg == "fast":
        from binjacobi.fast import fast_binary_jacobi as run
    else:
        raise InvalidInput(f"unknown algorithm {alg!r}; choose from {ALGORITHMS}")
    early, b, s = normalize(b, a)
    if early is not None:
        return early
    value = run(a, b)
    return -value if s else value
