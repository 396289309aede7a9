"""Exact integer primitives: roots, perfect powers, primes and p-adic valuations.

Everything here works on Python ints and never touches floating point.
"""

from __future__ import annotations

import bisect
import math
import threading
from dataclasses import dataclass
from math import isqrt

__all__ = [
    "SquarefreeDecomposition",
    "PrimeFactorization",
    "isqrt",
    "is_square",
    "kth_root",
    "perfect_power",
    "squarefree_decompose",
    "vp",
    "vp_factorial",
    "primes_up_to",
    "is_prime",
    "prev_prime",
    "primes_in",
    "factorize",
    "greatest_prime_factor",
]


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """``b = d * s**2`` with ``d`` squarefree."""

    b: int
    d: int
    s: int

    def __post_init__(self):
        if self.d * self.s * self.s != self.b:
            raise ValueError(f"{self.b} != {self.d}*{self.s}^2")


@dataclass(frozen=True)
class PrimeFactorization:
    """Sparse prime -> exponent map, primes strictly increasing."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, e in self.entries:
            if p <= prev or e < 1:
                raise ValueError(f"malformed factorization entry ({p}, {e})")
            prev = p

    @classmethod
    def from_dict(cls, exps: dict[int, int]) -> PrimeFactorization:
        return cls(tuple((p, e) for p, e in sorted(exps.items()) if e))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def exponent(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def value(self) -> int:
        out = 1
        for p, e in self.entries:
            out *= p**e
        return out

    def exponent_gcd(self) -> int:
        """gcd of all exponents; 0 for the empty factorization (value 1)."""
        g = 0
        for _, e in self.entries:
            g = math.gcd(g, e)
        return g

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def is_square(x: int) -> bool:
    if x < 0:
        return False
    r = isqrt(x)
    return r * r == x


def kth_root(x: int, k: int) -> tuple[int, bool]:
    """Return ``(floor(x ** (1/k)), exact)``."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if x < 1:
        raise ValueError("x must be >= 1")
    if k == 2:
        r = isqrt(x)
        return r, r * r == x
    if x.bit_length() <= k:
        # x < 2**k, so the root is 1
        return 1, x == 1
    # Newton from above: start at a power of two that is >= the true root.
    r = 1 << -(-x.bit_length() // k)
    while True:
        y = ((k - 1) * r + x // r ** (k - 1)) // k
        if y >= r:
            break
        r = y
    return r, r**k == x


def perfect_power(x: int) -> tuple[int, int] | None:
    """Return ``(base, k)`` with ``base**k == x`` and ``k`` maximal, or None.

    1 is not considered a perfect power.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if x < 4:
        return None
    for k in primes_up_to(x.bit_length()):
        r, exact = kth_root(x, k)
        if exact:
            inner = perfect_power(r)
            if inner is None:
                return r, k
            return inner[0], inner[1] * k
    return None


def squarefree_decompose(b: int) -> SquarefreeDecomposition:
    if b < 1:
        raise ValueError("b must be >= 1")
    d = s = 1
    for p, e in factorize(b).entries:
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return SquarefreeDecomposition(b, d, s)


def vp(x: int, p: int) -> int:
    """Largest h with p**h dividing x."""
    if x < 1:
        raise ValueError("x must be >= 1")
    h = 0
    while x % p == 0:
        x //= p
        h += 1
    return h


def vp_factorial(n: int, p: int) -> int:
    """Legendre's formula: exponent of p in n!."""
    total = 0
    while n:
        n //= p
        total += n
    return total


# -- primes -----------------------------------------------------------------

class _Sieve:
    """Grow-only Eratosthenes sieve. Each rebuild publishes a fresh immutable table."""

    def __init__(self):
        self._lock = threading.Lock()
        self.limit = 1
        self.flags = bytes(2)
        self.primes: tuple[int, ...] = ()

    def ensure(self, n: int):
        if n <= self.limit:
            return
        with self._lock:
            if n <= self.limit:
                return
            limit = max(n, 2 * self.limit, 1 << 16)
            flags = bytearray([1]) * (limit + 1)
            flags[0] = flags[1] = 0
            for p in range(2, isqrt(limit) + 1):
                if flags[p]:
                    flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
            primes = tuple(i for i, f in enumerate(flags) if f)
            self.flags, self.primes, self.limit = bytes(flags), primes, limit


_SIEVE = _Sieve()

# Bases 2..41 make Miller-Rabin deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    _SIEVE.ensure(n)
    primes = _SIEVE.primes
    return list(primes[: bisect.bisect_right(primes, n)])


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    if hi < 2 or hi < lo:
        return []
    _SIEVE.ensure(hi)
    primes = _SIEVE.primes
    return list(primes[bisect.bisect_left(primes, lo) : bisect.bisect_right(primes, hi)])


def _miller_rabin(n: int) -> bool:
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n <= _SIEVE.limit:
        return bool(_SIEVE.flags[n])
    if n < 1 << 20:
        _SIEVE.ensure(n)
        return bool(_SIEVE.flags[n])
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"no deterministic primality test available for {n}")
    return _miller_rabin(n)


def prev_prime(n: int) -> int:
    """Largest prime strictly below n."""
    if n <= 2:
        raise ValueError(f"no prime smaller than {n}")
    if n - 1 <= _SIEVE.limit or n < 1 << 22:
        _SIEVE.ensure(n)
        primes = _SIEVE.primes
        return primes[bisect.bisect_left(primes, n) - 1]
    c = n - 1
    while not is_prime(c):
        c -= 1
    return c


def factorize(x: int) -> PrimeFactorization:
    """Trial-division factorization; meant for desk-scale inputs."""
    if x < 1:
        raise ValueError("x must be >= 1")
    exps: dict[int, int] = {}
    for p in (2, 3):
        while x % p == 0:
            exps[p] = exps.get(p, 0) + 1
            x //= p
    # 6k +- 1 wheel
    p, step = 5, 2
    while p * p <= x:
        while x % p == 0:
            exps[p] = exps.get(p, 0) + 1
            x //= p
        p += step
        step = 6 - step
    if x > 1:
        exps[x] = exps.get(x, 0) + 1
    return PrimeFactorization.from_dict(exps)


def greatest_prime_factor(x: int) -> int:
    if x < 2:
        raise ValueError("x must be >= 2")
    return factorize(x).entries[-1][0]
