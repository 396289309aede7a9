"""Generalized Pell equation ``n^2 - d*m^2 = z^2`` over the positive integers.

Solutions are generated from a finite set of representatives multiplied by
powers of the fundamental unit ``n1 + m1*sqrt(d)``. The stream keeps only the
solutions with ``m`` even, which is what the Narayana square problem needs.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from math import isqrt

from .arith import is_square, squarefree_decompose

__all__ = [
    "DegenerateSurd",
    "PellInstance",
    "SurdExpansion",
    "FundamentalSolution",
    "PellSolution",
    "Representative",
    "Parity",
    "sqrt_cf",
    "fundamental_solution",
    "unit_power",
    "representatives",
    "dedup_representatives",
    "classify_parity",
    "solutions_even_m",
    "solve_degenerate",
]


class DegenerateSurd(ValueError):
    """Raised when sqrt(d) is rational, so there is no periodic expansion or unit."""


class Parity(str, Enum):
    ALL_K = "all-k"
    EVEN_K = "even-k"
    ODD_K = "odd-k"
    NONE = "none"


@dataclass(frozen=True)
class PellInstance:
    d: int
    z: int

    def __post_init__(self):
        if self.d < 1 or self.z < 1:
            raise ValueError(f"need d >= 1 and z >= 1, got d={self.d}, z={self.z}")
        if squarefree_decompose(self.d).s != 1:
            raise ValueError(f"d={self.d} is not squarefree")


@dataclass(frozen=True)
class SurdExpansion:
    a0: int
    period: tuple[int, ...]

    def terms(self, count: int) -> list[int]:
        """First ``count`` partial quotients, a0 included."""
        out = [self.a0]
        i = 0
        while len(out) < count:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out[:count]


@dataclass(frozen=True)
class FundamentalSolution:
    n1: int
    m1: int


@dataclass(frozen=True, order=True)
class PellSolution:
    n: int
    m: int
    # (representative index, unit exponent); -1 index marks the degenerate solver
    source: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Representative:
    nprime: int
    mprime: int
    parity_class: Parity


def sqrt_cf(d: int) -> SurdExpansion:
    """Periodic continued fraction of sqrt(d)."""
    if d < 2 or is_square(d):
        raise DegenerateSurd(f"sqrt({d}) is not a quadratic irrational")
    a0 = isqrt(d)
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = q * a - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return SurdExpansion(a0, tuple(period))


def fundamental_solution(d: int) -> FundamentalSolution:
    """Minimal positive solution of n^2 - d*m^2 = 1, read off the expansion of sqrt(d).

    The convergent at the end of the first period is used when the period
    length is even, at the end of the second period when it is odd.
    """
    cf = sqrt_cf(d)
    r = len(cf.period)
    length = r if r % 2 == 0 else 2 * r
    h0, h1 = 1, cf.a0
    k0, k1 = 0, 1
    for a in cf.terms(length)[1:]:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
    assert h1 * h1 - d * k1 * k1 == 1
    return FundamentalSolution(h1, k1)


def _mul(x0, y0, x1, y1, d):
    return x0 * x1 + d * y0 * y1, x0 * y1 + x1 * y0


def unit_power(d: int, k: int, fund: FundamentalSolution | None = None) -> tuple[int, int]:
    """Coefficients of (n1 + m1*sqrt(d))**k; negative k uses the conjugate unit."""
    fund = fund or fundamental_solution(d)
    bx, by = fund.n1, fund.m1 if k >= 0 else -fund.m1
    k = abs(k)
    rx, ry = 1, 0
    while k:
        if k & 1:
            rx, ry = _mul(rx, ry, bx, by, d)
        bx, by = _mul(bx, by, bx, by, d)
        k >>= 1
    return rx, ry


def _below_scaled_unit(lhs: int, z: int, fund: FundamentalSolution, d: int) -> bool:
    """Exact test of ``lhs < z^2 * (n1 + m1*sqrt(d))`` for an integer lhs."""
    # lhs - z^2*n1 < z^2*m1*sqrt(d); the right side is positive.
    diff = lhs - z * z * fund.n1
    if diff < 0:
        return True
    return diff * diff < z**4 * fund.m1 * fund.m1 * d


def classify_parity(rep: tuple[int, int] | Representative, d: int, n1: int) -> Parity:
    """Which unit exponents k make (n' + m'*sqrt(d)) * unit**k have even m.

    With d odd and n1 odd every power of the unit has m_k even, so an
    (odd, even) representative works for all k rather than only even k.
    """
    if isinstance(rep, Representative):
        n_, m_ = rep.nprime, rep.mprime
    else:
        n_, m_ = rep
    if d % 2 == 0 or (n_ % 2 == 0 and m_ % 2 == 0):
        return Parity.ALL_K
    if n_ % 2 and not m_ % 2:
        return Parity.ALL_K if n1 % 2 else Parity.EVEN_K
    if m_ % 2 and not n_ % 2:
        return Parity.NONE if n1 % 2 else Parity.ODD_K
    return Parity.NONE


def representatives(inst: PellInstance, dedup: bool = False) -> list[Representative]:
    """All nonnegative (n', m') solving the equation inside the representative box.

    The box is n' < z*sqrt(n1 + m1*sqrt(d)), m' < z*sqrt((n1 + m1*sqrt(d))/d),
    evaluated exactly. With ``dedup`` the list is cut down to one member per
    orbit under the unit group (up to coefficient signs).
    """
    d, z = inst.d, inst.z
    fund = fundamental_solution(d)
    reps = []
    m_ = 0
    # m' bound: d*m'^2 < z^2 * unit
    while _below_scaled_unit(d * m_ * m_, z, fund, d):
        nsq = z * z + d * m_ * m_
        n_ = isqrt(nsq)
        if n_ * n_ == nsq and _below_scaled_unit(nsq, z, fund, d):
            reps.append(Representative(n_, m_, classify_parity((n_, m_), d, fund.n1)))
        m_ += 1
    if dedup:
        reps = dedup_representatives(reps, d, fund)
    return reps


def dedup_representatives(reps, d: int, fund: FundamentalSolution | None = None):
    """Keep the first representative of each orbit (list order)."""
    fund = fund or fundamental_solution(d)
    if not reps:
        return []
    top = max(r.nprime for r in reps)
    covered = set()
    kept = []
    for r in reps:
        if (r.nprime, r.mprime) in covered:
            continue
        kept.append(r)
        for sign in (1, -1):
            for n, m, _ in _orbit_walk(r.nprime, r.mprime, d, fund, sign, top, 1, 0):
                covered.add((n, m))
    return kept


def _orbit_walk(n_, m_, d, fund, sign, n_limit, step, start):
    """Yield (|n|, |m|, k) for (n' + m' sqrt d) * unit**k with k = start, start+step*sign, ...

    Along one direction n_k = (alpha*eps^k + alpha_bar*eps^-k)/2 is convex in k,
    so once n exceeds the limit while increasing it never comes back.
    """
    ux, uy = unit_power(d, step * sign, fund)
    x, y = _mul(n_, m_, *unit_power(d, start, fund), d)
    k = start
    prev = None
    beyond = 0
    while True:
        ax, ay = abs(x), abs(y)
        if ax <= n_limit:
            yield ax, ay, k
            beyond = 0
        elif prev is not None and ax > prev:
            beyond += 1
            # guard window past the first increasing exceedance
            if beyond > 2:
                return
        prev = ax
        x, y = _mul(x, y, ux, uy, d)
        k += step * sign


def solutions_even_m(inst: PellInstance, n_limit: int) -> Iterator[PellSolution]:
    """Every positive solution with m even and n <= n_limit, once each, by increasing n."""
    if inst.d == 1:
        yield from (s for s in solve_degenerate(inst.z) if s.n <= n_limit)
        return
    d, z = inst.d, inst.z
    fund = fundamental_solution(d)
    found: dict[tuple[int, int], PellSolution] = {}
    for idx, rep in enumerate(representatives(inst)):
        cls = rep.parity_class
        if cls is Parity.NONE:
            continue
        if cls is Parity.ALL_K:
            step, starts = 1, ((0, 1), (-1, -1))
        elif cls is Parity.EVEN_K:
            step, starts = 2, ((0, 1), (-2, -1))
        else:
            step, starts = 2, ((1, 1), (-1, -1))
        for start, sign in starts:
            for n, m, k in _orbit_walk(rep.nprime, rep.mprime, d, fund, sign, n_limit, step, start):
                # belt and braces: never trust the class alone
                if m % 2 or n < 1:
                    continue
                assert n * n - d * m * m == z * z
                found.setdefault((n, m), PellSolution(n, m, (idx, k)))
    yield from sorted(found.values())


def solve_degenerate(z: int, even_m: bool = True) -> list[PellSolution]:
    """Positive solutions of n^2 - m^2 = z^2 (the d = 1 case) from divisor pairs of z^2.

    ``m`` is required to be positive; with ``even_m`` only even m are kept.
    """
    if z < 1:
        raise ValueError("z must be >= 1")
    zz = z * z
    out = []
    u = 1
    while u * u < zz:
        if zz % u == 0:
            v = zz // u
            if (u + v) % 2 == 0:
                n, m = (u + v) // 2, (v - u) // 2
                if not even_m or m % 2 == 0:
                    out.append(PellSolution(n, m, (-1, u)))
        u += 1
    out.sort()
    return out
