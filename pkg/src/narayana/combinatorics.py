"""Binomial, Catalan and Narayana numbers, exactly and in factored form."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import PrimeFactorization, primes_up_to, vp, vp_factorial

__all__ = [
    "NarayanaIndex",
    "binomial",
    "catalan",
    "narayana",
    "narayana_valuation",
    "narayana_factorization",
    "narayana_row_sum",
    "binomial_valuation",
    "binomial_factorization",
    "catalan_valuation",
    "catalan_factorization",
]


@dataclass(frozen=True)
class NarayanaIndex:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"Narayana index needs a, b >= 1, got ({self.a}, {self.b})")

    @property
    def nontrivial(self) -> bool:
        return self.a > self.b > 1


def _index(idx, b=None) -> NarayanaIndex:
    if isinstance(idx, NarayanaIndex):
        return idx
    if b is None:
        return NarayanaIndex(*idx)
    return NarayanaIndex(idx, b)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    q, r = divmod(math.comb(2 * n, n), n + 1)
    assert r == 0
    return q


def narayana(idx, b: int | None = None) -> int:
    """N(a, b) = binom(a, b) * binom(a, b-1) / a.

    Accepts either a NarayanaIndex, an ``(a, b)`` tuple, or ``narayana(a, b)``.
    """
    idx = _index(idx, b)
    a, b = idx.a, idx.b
    if a < b:
        return 0
    q, r = divmod(math.comb(a, b) * math.comb(a, b - 1), a)
    assert r == 0, f"N({a},{b}) not integral"
    return q


def binomial_valuation(n: int, k: int, p: int) -> int:
    """v_p(binom(n, k)) for 0 <= k <= n."""
    return vp_factorial(n, p) - vp_factorial(k, p) - vp_factorial(n - k, p)


def binomial_factorization(n: int, k: int) -> PrimeFactorization:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    exps = {p: binomial_valuation(n, k, p) for p in primes_up_to(n)}
    return PrimeFactorization.from_dict(exps)


def narayana_valuation(a: int, b: int, p: int) -> int:
    """v_p(N(a, b)) for a >= b >= 1, through factorial valuations only."""
    return (
        2 * vp_factorial(a, p)
        - vp(a, p)
        - vp_factorial(b, p)
        - vp_factorial(a - b, p)
        - vp_factorial(b - 1, p)
        - vp_factorial(a - b + 1, p)
    )


def narayana_factorization(idx, b: int | None = None) -> PrimeFactorization:
    idx = _index(idx, b)
    a, b = idx.a, idx.b
    if a < b:
        raise ValueError(f"N({a},{b}) = 0 has no factorization")
    exps = {p: narayana_valuation(a, b, p) for p in primes_up_to(a)}
    return PrimeFactorization.from_dict(exps)


def narayana_row_sum(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(narayana(n, k) for k in range(1, n + 1))


def catalan_valuation(n: int, p: int) -> int:
    """v_p(C_n) = v_p((2n)!) - v_p(n!) - v_p((n+1)!)."""
    return vp_factorial(2 * n, p) - vp_factorial(n, p) - vp_factorial(n + 1, p)


def catalan_factorization(n: int) -> PrimeFactorization:
    if n < 1:
        raise ValueError("n must be >= 1")
    exps = {p: catalan_valuation(n, p) for p in primes_up_to(2 * n)}
    return PrimeFactorization.from_dict(exps)
