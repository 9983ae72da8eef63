import pytest

from binjacobi.bindiv import (IterClass, binary_divide_pos, classify, inverse_mod_pow2,
                              low_quotient)
from binjacobi.core import InvalidInput


@pytest.mark.parametrize("a, b, q, r", [(1, 2, 3, 4), (3, 4, 5, 8), (5, 6, 1, 8)])
def test_examples(a, b, q, r):
    res = binary_divide_pos(a, b)
    assert (res.q, res.r) == (q, r)


@pytest.mark.parametrize("a, b", [(2, 4), (3, 0), (3, 5), (-1, 2)])
def test_precondition(a, b):
    with pytest.raises(InvalidInput):
        binary_divide_pos(a, b)


def test_inverse_against_builtin():
    for k in range(1, 80):
        for x in (1, 3, 5, 7, 12345, 2**61 - 1, 3**50):
            assert inverse_mod_pow2(x, k) == pow(x, -1, 1 << k)


def test_inverse_reads_low_bits_only():
    assert inverse_mod_pow2(7 + (1 << 900), 10) == inverse_mod_pow2(7, 10)


def test_exhaustive_contract_12_bits():
    for a in range(1, 1 << 12, 2):
        for b in range(2, 1 << 12, 2):
            q, r, j = binary_divide_pos(a, b)
            assert q & 1 and 0 < q < 1 << (j + 1)
            assert r == a + q * (b >> j)
            assert r % (1 << (j + 1)) == 0
            mod = 1 << (j + 1)
            assert q == (-a * pow(b >> j, -1, mod)) % mod


def test_large_valuation():
    a, b = 2**521 - 1, 3 << 200
    q, r, j = binary_divide_pos(a, b)
    assert j == 200 and q < 1 << 201 and r % (1 << 201) == 0
    assert low_quotient(a, b >> j, j) == q


@pytest.mark.parametrize("j, q, cls", [(2, 5, IterClass.GOOD), (1, 1, IterClass.BAD),
                                       (1, 3, IterClass.UGLY), (7, 1, IterClass.GOOD)])
def test_classify(j, q, cls):
    assert classify(j, q) is cls


def test_classify_covers_every_outcome():
    for j in range(1, 6):
        for q in range(1, 1 << (j + 1), 2):
            assert classify(j, q) in (IterClass.GOOD, IterClass.BAD, IterClass.UGLY)
    with pytest.raises(InvalidInput):
        classify(1, 5)
