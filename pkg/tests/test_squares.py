import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from narayana.arith import squarefree_decompose
from narayana.combinatorics import binomial, narayana
from narayana.pell import PellSolution
from narayana.squares import (
    SquareHit,
    crosscheck,
    family_even,
    family_odd,
    family_poly,
    family_quotient,
    figure1_data,
    hit_from_solution,
    is_square_pair,
    oracle_squares_for_b,
    solution_from_a,
    squares_for_b,
)

# every a <= 500000 with N(a, 28) a square, from the brute-force oracle
B28_ALL = [48, 63, 252, 363, 1183, 1728, 2527, 8427, 12348, 60543, 88752, 297052, 435483]


def is_square_by_value(a, b):
    v = narayana(a, b)
    return math.isqrt(v) ** 2 == v


@pytest.mark.parametrize("a, b, expected", [(63, 28, True), (9, 5, True), (10, 4, False), (9, 2, True)])
def test_is_square_pair(a, b, expected):
    assert is_square_pair(a, b) is expected
    assert is_square_by_value(a, b) is expected


def test_is_square_pair_matches_value_test():
    for a in range(2, 90):
        for b in range(1, a + 1):
            assert is_square_pair(a, b) == is_square_by_value(a, b)


def test_b28_known_hits():
    hits = {h.a: h for h in squares_for_b(28, 500000)}
    for a in (63, 252, 1728, 435483):
        assert a in hits
    assert hits[63].root == 69923143311577493
    assert hits[252].root == 266280675495914347757098255444196475
    assert hits[1728].root == 36393925811128600489003879513323005869574641433293468096956
    assert (hits[1728].witness.n, hits[1728].witness.m) == (3429, 1296)
    assert (hits[435483].witness.n, hits[435483].witness.m) == (870939, 329184)
    assert (hits[63].witness.n, hits[63].witness.m) == (99, 36)
    assert (hits[252].witness.n, hits[252].witness.m) == (477, 180)


def test_b28_full_set_matches_oracle():
    got = [h.a for h in squares_for_b(28, 500000)]
    assert got == B28_ALL
    assert oracle_squares_for_b(28, 500000) == B28_ALL


def test_b2_small():
    hits = squares_for_b(2, 100)
    assert [(h.a, h.root) for h in hits] == [(9, 6), (50, 35)]


def test_hit_invariants():
    for b in (2, 3, 5, 6, 12, 28, 45):
        s = squarefree_decompose(b).s
        for h in squares_for_b(b, 20000):
            assert h.a > h.b > 1
            v = narayana(h.a, h.b)
            assert math.isqrt(v) == h.root and h.root**2 == v
            assert h.root * h.witness.m == 2 * s * binomial(h.a, h.b)
            assert 2 * h.a == h.witness.n + b - 1


def test_forward_backward_correspondence():
    for b in range(2, 40):
        for a in oracle_squares_for_b(b, 3000):
            n, m = solution_from_a(a, b)
            d = squarefree_decompose(b).d
            assert n * n - d * m * m == (b - 1) ** 2
            assert m % 2 == 0
            hit = hit_from_solution(PellSolution(n, m), b, squarefree_decompose(b).s)
            assert hit.a == a


def test_hit_below_b_is_dropped():
    # (27, 0) maps to a = 27 < 28
    assert hit_from_solution(PellSolution(27, 0), 28, 2) is None
    with pytest.raises(ValueError):
        SquareHit(5, 5, 1, PellSolution(1, 0), 1)


def test_families_examples():
    assert family_odd(3) == (9, 5)
    assert narayana(9, 5) == 1764 == 42**2
    assert family_even(4) == (14, 7)
    assert family_quotient(14, 7) == 16
    assert family_poly(2) == (20, 5)
    assert family_quotient(20, 5) == 64


@pytest.mark.parametrize("fn, n", [(family_odd, 4), (family_odd, 1), (family_even, 5), (family_even, 2), (family_poly, 1)])
def test_families_contract(fn, n):
    with pytest.raises(ValueError):
        fn(n)


@given(st.integers(min_value=1, max_value=300))
def test_family_odd_property(k):
    n = 2 * k + 1
    a, b = family_odd(n)
    assert family_quotient(a, b) == n * n and is_square_pair(a, b)


def test_figure1_small():
    assert figure1_data(3) == []
    rows = figure1_data(9)
    assert (9, 5) not in rows  # 5 > 9/2
    assert (9, 2) in rows
    assert all(b <= a // 2 for a, b in rows)
    assert (63, 28) in figure1_data(63)


def test_figure1_matches_value_scan():
    want = [(a, b) for a in range(4, 61) for b in range(2, a // 2 + 1) if is_square_by_value(a, b)]
    assert figure1_data(60) == want


def test_figure1_symmetric_complete():
    rows = set(figure1_data(400))
    for a in range(4, 401):
        for b in range(2, a // 2 + 1):
            assert ((a, b) in rows) == is_square_pair(a, a - b + 1)


def test_figure1_workers_identical():
    assert figure1_data(300, workers=1) == figure1_data(300, workers=3)


def test_crosscheck_examples():
    r = crosscheck(28, 2000)
    assert r.ok and r.pell == [48, 63, 252, 363, 1183, 1728]
    assert {63, 252, 1728} <= set(r.pell)
    assert crosscheck(3, 1000).ok
    r = crosscheck(4, 10**6)
    assert r.ok and r.pell == [] and r.oracle == []


def test_crosscheck_reports_rather_than_raises():
    r = crosscheck(28, 100)
    r.oracle = r.oracle + [99]
    assert not r.ok and r.only_oracle == [99]
    assert "DISAGREE" in r.summary()


@pytest.mark.slow
def test_crosscheck_many_b():
    for b in range(2, 61):
        if squarefree_decompose(b).d >= 2:
            assert crosscheck(b, 5000).ok, b


def test_square_b_finite():
    for b in (4, 9, 16, 25, 36, 49):
        assert crosscheck(b, 20000).ok, b
