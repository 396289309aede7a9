"""Exact tools for deciding when Catalan and Narayana numbers are perfect powers."""

from .arith import (
    PrimeFactorization,
    SquarefreeDecomposition,
    greatest_prime_factor,
    is_prime,
    isqrt,
    kth_root,
    perfect_power,
    prev_prime,
    primes_in,
    primes_up_to,
    squarefree_decompose,
    vp,
    vp_factorial,
)
from .combinatorics import NarayanaIndex, binomial, catalan, narayana, narayana_factorization, narayana_row_sum
from .pell import (
    PellInstance,
    PellSolution,
    fundamental_solution,
    representatives,
    solutions_even_m,
    solve_degenerate,
    sqrt_cf,
    unit_power,
)
from .powers import PowerCertificate, catalan_not_power, certify, conjecture_scan, exponent_gcd
from .squares import SquareHit, crosscheck, figure1_data, is_square_pair, squares_for_b

__version__ = "0.1.0"
