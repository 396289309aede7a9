import math

import pytest


def trial_factor(x):
    """Independent trial-division oracle, kept separate from the library."""
    out = {}
    p = 2
    while p * p <= x:
        while x % p == 0:
            out[p] = out.get(p, 0) + 1
            x //= p
        p += 1
    if x > 1:
        out[x] = out.get(x, 0) + 1
    return out


def naive_is_prime(n):
    return n >= 2 and all(n % q for q in range(2, math.isqrt(n) + 1))


@pytest.fixture
def factor():
    return trial_factor
