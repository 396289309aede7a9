"""Perfect k-th powers among Catalan and Narayana numbers.

Certificates re-run the valuation arguments numerically: a witness prime p is
found whose exponent in the number is 1 or 2, which caps k. Every valuation
comes from Legendre's formula, so huge values are never factored.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction

from .arith import is_prime, kth_root, perfect_power, primes_in, primes_up_to, prev_prime, vp
from .combinatorics import binomial_valuation, catalan, catalan_valuation, narayana, narayana_valuation
from .squares import run_partitioned

__all__ = [
    "Rule",
    "PowerCertificate",
    "ScanReport",
    "ProofStepFailed",
    "THM2_RATIO",
    "ramanujan_check",
    "catalan_witness",
    "catalan_not_power",
    "exponent_gcd",
    "prop_bound",
    "thm1_threshold",
    "thm1_certify",
    "thm2_applies",
    "thm2_certify",
    "thm2_premise_holds",
    "certify",
    "conjecture_scan",
    "figure2_data",
    "b3_pillai_identity",
    "exponent_gcd_certificate",
]

# 1.95 as an exact rational
THM2_RATIO = Fraction(39, 20)


class ProofStepFailed(AssertionError):
    """A numerical re-check of a proof step came out wrong."""


class Rule(str, Enum):
    CATALAN_RAMANUJAN = "catalan-ramanujan"
    PROP_A_PRIME = "prop-a-prime"
    PROP_A_PRIME_SQUARE = "prop-a-prime-square"
    THM1 = "thm1"
    THM2 = "thm2"
    EXPONENT_GCD = "exponent-gcd"


@dataclass(frozen=True)
class PowerCertificate:
    rule: Rule
    a: int
    b: int | None
    p: int
    valuation: int
    k_bound: int

    def __post_init__(self):
        if self.valuation not in (1, 2) or self.k_bound not in (1, 2):
            raise ValueError(f"bad certificate {self}")
        if self.k_bound < self.valuation:
            raise ValueError(f"valuation {self.valuation} cannot force k <= {self.k_bound}")
        if self.rule in (Rule.CATALAN_RAMANUJAN, Rule.PROP_A_PRIME) and self.k_bound != 1:
            raise ValueError(f"rule {self.rule.value} certifies k = 1")

    def record(self) -> dict:
        out = asdict(self)
        out["rule"] = self.rule.value
        return out

    def to_json(self) -> str:
        return json.dumps(self.record(), sort_keys=True)

    CSV_HEADER = "rule,a,b,p,valuation,k_bound"

    def to_csv(self) -> str:
        b = "" if self.b is None else self.b
        return f"{self.rule.value},{self.a},{b},{self.p},{self.valuation},{self.k_bound}"


@dataclass
class ScanReport:
    a_max: int
    square_pairs: list[tuple[int, int]] = field(default_factory=list)
    higher_power_hits: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def square_hits(self) -> int:
        return len(self.square_pairs)

    def record(self) -> dict:
        return {
            "a_max": self.a_max,
            "square_hits": self.square_hits,
            "higher_power_hits": [list(h) for h in self.higher_power_hits],
        }


# -- Catalan -----------------------------------------------------------------

def ramanujan_check(n: int) -> bool:
    """At least two primes in (n, 2n]."""
    if n < 6:
        raise ValueError("stated for n >= 6")
    return len(primes_in(n + 1, 2 * n)) >= 2


def catalan_witness(n: int) -> PowerCertificate:
    """Largest prime p in [n+2, 2n] with v_p(C_n) = 1."""
    if n < 6:
        raise ValueError("catalan_witness needs n >= 6")
    for p in reversed(primes_in(n + 2, 2 * n)):
        if catalan_valuation(n, p) == 1:
            return PowerCertificate(Rule.CATALAN_RAMANUJAN, n, None, p, 1, 1)
    raise ProofStepFailed(f"no prime in [{n + 2}, {2 * n}] divides C_{n} exactly once")


def catalan_not_power(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 5:
        return perfect_power(catalan(n)) is None
    catalan_witness(n)
    return True


# -- Narayana ----------------------------------------------------------------

def exponent_gcd(a: int, b: int) -> int:
    """gcd of the exponents of N(a, b); 0 when N = 1. Stops early once it reaches 1."""
    if not a > b > 1:
        raise ValueError(f"need a > b > 1, got ({a}, {b})")
    g = 0
    for p in primes_up_to(a):
        e = narayana_valuation(a, b, p)
        if e:
            g = math.gcd(g, e)
            if g == 1:
                return 1
    return g


def _check_half(a: int, b: int):
    if b < 2 or 2 * b > a:
        raise ValueError(f"need 2 <= b <= a/2, got ({a}, {b})")


def prop_bound(a: int, b: int) -> PowerCertificate | None:
    """Certificate when a is a prime (k = 1) or the square of a prime (k <= 2)."""
    _check_half(a, b)
    if is_prime(a):
        v = narayana_valuation(a, b, a)
        if v != 1:
            raise ProofStepFailed(f"v_{a}(N({a},{b})) = {v}, expected 1")
        return PowerCertificate(Rule.PROP_A_PRIME, a, b, a, 1, 1)
    r, exact = kth_root(a, 2)
    if exact and is_prime(r):
        v = narayana_valuation(a, b, r)
        # -2 + (2 - v_p(b)) + (2 - v_p(b-1))
        if v != 2 - vp(b, r) - vp(b - 1, r) or v not in (1, 2):
            raise ProofStepFailed(f"v_{r}(N({a},{b})) = {v}")
        return PowerCertificate(Rule.PROP_A_PRIME_SQUARE, a, b, r, v, 2)
    return None


def thm1_threshold(a: int) -> tuple[int, int]:
    """(p, a - p + 1) with p the largest prime below a."""
    if a < 4:
        raise ValueError("a must be >= 4")
    p = prev_prime(a)
    return p, a - p + 1


def thm1_certify(a: int, b: int) -> PowerCertificate:
    p, threshold = thm1_threshold(a)
    if not (2 * b <= a and b > threshold):
        raise ValueError(f"({a}, {b}) outside a/2 >= b > {threshold}")
    if a % p == 0 or b % p == 0:
        raise ProofStepFailed(f"p={p} divides a or b")
    if p == a - b + 1:
        # cannot happen under b > a - p + 1, kept for completeness
        if binomial_valuation(a, p, p) != 0:
            raise ProofStepFailed(f"p={p} divides binom({a},{p})")
        v = narayana_valuation(a, b, p)
        if v != 1:
            raise ProofStepFailed(f"v_{p}(N({a},{b})) = {v}, expected 1")
        return PowerCertificate(Rule.THM1, a, b, p, 1, 1)
    if (a - b + 1) % p == 0:
        raise ProofStepFailed(f"p={p} divides a-b+1")
    if binomial_valuation(a, b, p) != 1:
        raise ProofStepFailed(f"p={p} does not divide binom({a},{b}) exactly once")
    v = narayana_valuation(a, b, p)
    if v not in (1, 2):
        raise ProofStepFailed(f"v_{p}(N({a},{b})) = {v}")
    return PowerCertificate(Rule.THM1, a, b, p, v, v)


def thm2_applies(a: int, b: int) -> bool:
    """a/2 >= b >= sqrt(a)/1.95, decided as 39^2 b^2 >= 400 a."""
    return 2 * b <= a and 39 * 39 * b * b >= 400 * a


def _largest_prime_of_binomial(a: int, b: int) -> int:
    for p in reversed(primes_up_to(a)):
        # a prime above a-b >= b is one of the numerator factors a-b+1..a
        if p > a - b or binomial_valuation(a, b, p):
            return p
    raise ValueError(f"binom({a},{b}) has no prime factor")


def thm2_premise_holds(a: int, b: int) -> bool:
    """P(binom(a, b)) > 1.95 b, the cited lower bound on the largest prime factor."""
    return 20 * _largest_prime_of_binomial(a, b) > 39 * b


def thm2_certify(a: int, b: int, strict: bool = True) -> PowerCertificate:
    """Witness p = P(binom(a, b)) divides N(a, b) once or twice.

    ``strict`` also demands p > 1.95 b as the argument is usually stated. That
    bound fails for some small pairs (e.g. (4, 2), (540, 270)); the valuation
    argument itself only needs p > b and p^2 > a, which is what
    ``strict=False`` checks.
    """
    if b < 2 or not thm2_applies(a, b):
        raise ValueError(f"({a}, {b}) outside a/2 >= b >= sqrt(a)/1.95")
    p = _largest_prime_of_binomial(a, b)
    if strict and not 20 * p > 39 * b:
        raise ProofStepFailed(f"P(binom({a},{b})) = {p} <= 1.95*{b}")
    if not p > b:
        raise ProofStepFailed(f"P(binom({a},{b})) = {p} <= {b}")
    if not p * p > a:
        raise ProofStepFailed(f"{p}^2 <= {a}")
    if binomial_valuation(a, b, p) != 1:
        raise ProofStepFailed(f"p={p} does not divide binom({a},{b}) exactly once")
    # p divides b*binom^2 exactly twice and at most one of a, a-b+1
    v = 2 - (vp(a, p) if a % p == 0 else 0) - (vp(a - b + 1, p) if (a - b + 1) % p == 0 else 0)
    if v != narayana_valuation(a, b, p) or v not in (1, 2):
        raise ProofStepFailed(f"v_{p}(N({a},{b})) = {narayana_valuation(a, b, p)}")
    return PowerCertificate(Rule.THM2, a, b, p, v, 2)


def certify(a: int, b: int) -> list[PowerCertificate]:
    """Every applicable certificate for N(a, b), in rule order prop, thm1, thm2.

    b > a/2 is folded onto a - b + 1 by symmetry.
    """
    if not a > b > 1:
        raise ValueError(f"need a > b > 1, got ({a}, {b})")
    if 2 * b > a:
        b = a - b + 1
        if b < 2:
            return []
    out = []
    cert = prop_bound(a, b)
    if cert is not None:
        out.append(cert)
    if a >= 4:
        _, threshold = thm1_threshold(a)
        if b > threshold:
            out.append(thm1_certify(a, b))
    if thm2_applies(a, b):
        try:
            out.append(thm2_certify(a, b, strict=False))
        except ProofStepFailed:
            # only (9, 2) in a <= 3000, where the prime-square rule applies instead
            pass
    return out


# -- scans -------------------------------------------------------------------

def _scan_rows(lo: int, hi: int) -> list[tuple[int, int, int]]:
    """(a, b, gcd) for every cell with gcd >= 2 (gcd 0 never occurs for a > b > 1)."""
    out = []
    vf_cache: dict[int, list[int]] = {}
    for a in range(max(lo, 4), hi + 1):
        primes = primes_up_to(a)
        for b in range(2, a // 2 + 1):
            g = 0
            for p in primes:
                vf = vf_cache.get(p)
                if vf is None:
                    vf = vf_cache[p] = _factorial_valuations(p, hi)
                e = 2 * vf[a] - (vf[a] - vf[a - 1]) - vf[b] - vf[a - b] - vf[b - 1] - vf[a - b + 1]
                if e:
                    g = math.gcd(g, e)
                    if g == 1:
                        break
            if g != 1:
                out.append((a, b, g))
    return out


def _factorial_valuations(p: int, n: int) -> list[int]:
    vf = [0] * (n + 1)
    for k in range(1, n + 1):
        x, e = k, 0
        while x % p == 0:
            x //= p
            e += 1
        vf[k] = vf[k - 1] + e
    return vf


def conjecture_scan(a_max: int, workers: int | None = 1) -> ScanReport:
    """Exponent gcd of N(a, b) for all a <= a_max, 1 < b <= a/2."""
    rows = run_partitioned(_scan_rows, 4, a_max, workers)
    report = ScanReport(a_max)
    for a, b, g in rows:
        if g % 2 == 0:
            report.square_pairs.append((a, b))
        if g >= 3:
            report.higher_power_hits.append((a, b, g))
    return report


def figure2_data(a_max: int) -> list[tuple[int, int, int, int, str]]:
    """Rows (a, a-p+1, num, den, stronger) for 4 <= a <= a_max.

    num/den = (sqrt(a)/1.95)^2 = 400a/1521 in lowest terms; ``stronger`` names
    the theorem with the smaller b-threshold, compared exactly on squares.
    """
    rows = []
    for a in range(4, a_max + 1):
        _, t1 = thm1_threshold(a)
        sq = Fraction(a) / (THM2_RATIO * THM2_RATIO)
        lhs, rhs = t1 * t1 * 1521, 400 * a
        stronger = "thm1" if lhs < rhs else "thm2" if lhs > rhs else "tie"
        rows.append((a, t1, sq.numerator, sq.denominator, stronger))
    return rows


def b3_pillai_identity(a: int) -> bool:
    """(2(a-1)^2 - 1)^2 - 48 N(a, 3) == 1."""
    if a < 3:
        raise ValueError("a must be >= 3")
    return (2 * (a - 1) ** 2 - 1) ** 2 - 48 * narayana(a, 3) == 1


def exponent_gcd_certificate(a: int, b: int) -> PowerCertificate | None:
    """Brute-force certificate: the exponent gcd itself, when it is 1 or 2."""
    g = exponent_gcd(a, b)
    if g not in (1, 2):
        return None
    if g == 1:
        for p in primes_up_to(a):
            if narayana_valuation(a, b, p) == 1:
                return PowerCertificate(Rule.EXPONENT_GCD, a, b, p, 1, 1)
    for p in primes_up_to(a):
        if narayana_valuation(a, b, p) == 2:
            return PowerCertificate(Rule.EXPONENT_GCD, a, b, p, 2, 2)
    # gcd 1 without a valuation-1 prime (or gcd 2 without valuation 2) gives no witness
    return None

