import random

import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20091202)


def rand_pair(rng, bits):
    """a odd, b even and nonzero, both below 2^bits."""
    a = rng.getrandbits(bits) | 1
    b = rng.getrandbits(bits) & ~1
    return a, b or 2


def legendre_product(b, a):
    """(b|a) from its definition: factor a by trial division and multiply
    Legendre symbols obtained from Euler's criterion."""
    result = 1
    p = 3
    n = a
    while n > 1:
        if p * p > n:
            p = n
        while n % p == 0:
            n //= p
            e = pow(b % p, (p - 1) // 2, p)
            result *= 0 if e == 0 else (1 if e == 1 else -1)
        p += 2
    return result
