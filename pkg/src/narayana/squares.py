"""When is N(a, b) a perfect square.

N(a, b) = b/(a(a-b+1)) * binom(a, b)^2, so N(a, b) is a square exactly when
a*b*(a-b+1) is. Writing b = d*s^2 turns that into n^2 - d*m^2 = (b-1)^2 with
m even and a = (n+b-1)/2, which :mod:`narayana.pell` solves.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt

from .arith import is_square, squarefree_decompose
from .combinatorics import binomial, narayana
from .pell import PellInstance, PellSolution, solutions_even_m

__all__ = [
    "SquareHit",
    "CrosscheckReport",
    "is_square_pair",
    "hit_from_solution",
    "solution_from_a",
    "squares_for_b",
    "oracle_squares_for_b",
    "family_odd",
    "family_even",
    "family_poly",
    "family_quotient",
    "figure1_data",
    "crosscheck",
]


@dataclass(frozen=True)
class SquareHit:
    a: int
    b: int
    root: int
    witness: PellSolution
    s: int

    def __post_init__(self):
        if not self.a > self.b > 1:
            raise ValueError(f"square hit needs a > b > 1, got ({self.a}, {self.b})")


def is_square_pair(a: int, b: int) -> bool:
    """True iff N(a, b) is a perfect square (for a >= b >= 1)."""
    if not a >= b >= 1:
        raise ValueError(f"need a >= b >= 1, got ({a}, {b})")
    return is_square(a * b * (a - b + 1))


def hit_from_solution(sol: PellSolution, b: int, s: int, verify: bool = True) -> SquareHit | None:
    """Map an even-m solution to a = (n + b - 1)/2; None when a <= b."""
    twice_a = sol.n + b - 1
    assert twice_a % 2 == 0, f"n={sol.n} and b-1={b - 1} differ in parity"
    a = twice_a // 2
    if a <= b:
        return None
    num = 2 * s * binomial(a, b)
    root, r = divmod(num, sol.m)
    assert r == 0, f"2s*binom({a},{b}) not divisible by m={sol.m}"
    if verify:
        value = narayana(a, b)
        assert isqrt(value) == root and root * root == value, f"N({a},{b}) is not {root}^2"
    return SquareHit(a, b, root, sol, s)


def solution_from_a(a: int, b: int) -> tuple[int, int]:
    """Inverse map: (n, m) = (2a + 1 - b, 2s*c'/b) where a*b*(a-b+1) = c'^2."""
    cc = a * b * (a - b + 1)
    c = isqrt(cc)
    if c * c != cc:
        raise ValueError(f"N({a},{b}) is not a square")
    s = squarefree_decompose(b).s
    m, r = divmod(2 * s * c, b)
    assert r == 0
    return 2 * a + 1 - b, m


def squares_for_b(b: int, a_limit: int, verify: bool = True) -> list[SquareHit]:
    """All a with b < a <= a_limit and N(a, b) a perfect square, via the Pell equation."""
    if b < 2:
        raise ValueError("b must be > 1")
    dec = squarefree_decompose(b)
    n_limit = 2 * a_limit + 1 - b
    if n_limit < 1:
        return []
    inst = PellInstance(dec.d, b - 1)
    hits = []
    for sol in solutions_even_m(inst, n_limit):
        hit = hit_from_solution(sol, b, dec.s, verify=verify)
        if hit is not None and hit.a <= a_limit:
            hits.append(hit)
    hits.sort(key=lambda h: h.a)
    return hits


def oracle_squares_for_b(b: int, a_limit: int) -> list[int]:
    """Brute-force scan of is_square_pair over b < a <= a_limit."""
    return [a for a in range(b + 1, a_limit + 1) if is_square(a * b * (a - b + 1))]


# -- explicit families --------------------------------------------------------

def family_odd(n: int) -> tuple[int, int]:
    """(n^2, (n^2+1)/2) for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError("family_odd needs odd n >= 3")
    return n * n, (n * n + 1) // 2


def family_even(n: int) -> tuple[int, int]:
    """(n^2-2, (n^2-2)/2) for even n >= 4."""
    if n < 4 or n % 2:
        raise ValueError("family_even needs even n >= 4")
    return n * n - 2, (n * n - 2) // 2


def family_poly(n: int) -> tuple[int, int]:
    """(n^2(n^2+1), n^2+1) for n >= 2."""
    if n < 2:
        raise ValueError("family_poly needs n >= 2")
    return n * n * (n * n + 1), n * n + 1


def family_quotient(a: int, b: int) -> int:
    """a(a-b+1)/b, which must be an exact integer for the family pairs."""
    q, r = divmod(a * (a - b + 1), b)
    if r:
        raise ValueError(f"b={b} does not divide a(a-b+1)")
    return q


# -- figure 1 / crosscheck ----------------------------------------------------

def _figure1_rows(lo: int, hi: int) -> list[tuple[int, int]]:
    rows = []
    for a in range(lo, hi + 1):
        for b in range(2, a // 2 + 1):
            if is_square(a * b * (a - b + 1)):
                rows.append((a, b))
    return rows


def _chunks(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    # balanced by cell count, which grows like a^2
    if hi < lo:
        return []
    parts = max(1, min(parts, hi - lo + 1))
    total = hi * hi - (lo - 1) * (lo - 1)
    bounds = [lo - 1]
    for i in range(1, parts):
        bounds.append(max(bounds[-1], isqrt((lo - 1) ** 2 + total * i // parts)))
    bounds.append(hi)
    return [(bounds[i] + 1, bounds[i + 1]) for i in range(parts) if bounds[i + 1] > bounds[i]]


def run_partitioned(fn, lo: int, hi: int, workers: int | None = None) -> list:
    """Apply ``fn(lo, hi) -> list`` over a split range and concatenate in range order."""
    workers = resolve_workers(workers)
    chunks = _chunks(lo, hi, workers * 4 if workers > 1 else 1)
    if workers <= 1 or len(chunks) <= 1:
        out = []
        for c in chunks:
            out.extend(fn(*c))
        return out
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fn, *zip(*chunks)))
    return [row for part in parts for row in part]


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("NARAYANA_WORKERS")
        workers = int(env) if env else (os.cpu_count() or 1)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    return workers


def figure1_data(a_max: int, workers: int | None = 1) -> list[tuple[int, int]]:
    """Pairs (a, b) with 1 < b <= a/2, a <= a_max and N(a, b) a square, sorted."""
    return run_partitioned(_figure1_rows, 4, a_max, workers)


@dataclass
class CrosscheckReport:
    b: int
    a_limit: int
    pell: list[int] = field(default_factory=list)
    oracle: list[int] = field(default_factory=list)

    @property
    def only_pell(self) -> list[int]:
        return sorted(set(self.pell) - set(self.oracle))

    @property
    def only_oracle(self) -> list[int]:
        return sorted(set(self.oracle) - set(self.pell))

    @property
    def ok(self) -> bool:
        return self.pell == self.oracle

    def summary(self) -> str:
        status = "agree" if self.ok else "DISAGREE"
        text = f"b={self.b} a<={self.a_limit}: pell={self.pell} oracle={self.oracle} {status}"
        if not self.ok:
            text += f" only_pell={self.only_pell} only_oracle={self.only_oracle}"
        return text


def crosscheck(b: int, a_limit: int) -> CrosscheckReport:
    """Compare the Pell route against brute force; disagreement is reported, not raised."""
    pell = [h.a for h in squares_for_b(b, a_limit, verify=False)]
    return CrosscheckReport(b, a_limit, pell, oracle_squares_for_b(b, a_limit))
