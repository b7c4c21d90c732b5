"""Closed-form family counts, probability diagnostics and the bound sweep."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permcensus.arith import first_primes, jordan_totient, primes_up_to, sigma_k
from permcensus.census import (
    bound_report,
    census_row,
    census_rows,
    count_a,
    count_a1,
    count_a2,
    count_b,
    count_b1,
    count_b2,
    limit_diagnostics,
    psi,
    significant_digits,
)
from permcensus.partitions import partition_count, partition_table

# (n, b, a, b1, a1, b2, a2) for the first few degrees
KNOWN_ROWS = [
    (3, 3, 3, 1, 1, 3, 3),
    (4, 12, 9, 4, 4, 12, 9),
    (5, 42, 27, 10, 10, 31, 19),
    (6, 99, 36, 20, 18, 65, 32),
    (7, 231, 90, 35, 35, 120, 55),
    (8, 462, 108, 56, 48, 203, 75),
]


def test_known_small_values():
    for n, b, a, b1, a1, b2, a2 in KNOWN_ROWS:
        assert count_b(n) == b
        assert count_a(n) == a
        assert count_b1(n) == b1
        assert count_a1(n) == a1
        assert count_b2(n) == b2
        assert count_a2(n) == a2


def test_degree_validation():
    for func in (count_b, count_a, count_b1, count_a1, count_b2, count_a2):
        with pytest.raises(ValueError):
            func(2)


def test_single_cycle_closed_forms():
    """b1 is the binomial C(n,3); a1 is (n/6)(J2(n) - 3 J1(n))."""
    for n in range(3, 300):
        assert count_b1(n) == n * (n - 1) * (n - 2) // 6
        assert 6 * count_a1(n) == n * (jordan_totient(n, 2) - 3 * jordan_totient(n, 1))


def test_one_cycle_closed_forms():
    for n in range(3, 300):
        assert 24 * count_b2(n) == (n - 1) * (n - 2) * (n * n + 5 * n + 12)
        assert count_a2(n) == count_a1(n) + (n + 1) * (n - 2) // 2


def test_total_closed_forms():
    for n in range(3, 300):
        assert 8 * count_a(n) == 3 * (n - 2) * jordan_totient(n, 2)
        lhs = 8 * count_b(n)
        rhs = 3 * (
            psi_by_hand(3, n) - 2 * psi_by_hand_weighted(n) + n * partition_count(n)
        )
        assert lhs == rhs


def psi_by_hand(exponent, n):
    """sum of sigma_3(k) P(n-k); exponent fixed to 3 for the b-count check."""
    table = partition_table(n)
    return sum(sigma_k(k, 3) * table[n - k] for k in range(1, n + 1))


def psi_by_hand_weighted(n):
    """sum of k sigma(k) P(n-k)."""
    table = partition_table(n)
    return sum(k * sigma_k(k, 1) * table[n - k] for k in range(1, n + 1))


def test_a_count_decomposition():
    """a = a1 + (5/24) n J2 + (1/2) n J1 - (3/4) J2, the two-cylinder balance."""
    for n in range(3, 200):
        j1 = jordan_totient(n, 1)
        j2 = jordan_totient(n, 2)
        assert 24 * (count_a(n) - count_a1(n)) == 5 * n * j2 + 12 * n * j1 - 18 * j2


def test_psi_definition():
    for n in range(1, 150):
        table = partition_table(n)
        for a in range(4):
            direct = sum(k**a * sigma_k(k, 1) * table[n - k] for k in range(1, n + 1))
            assert psi(a, n) == direct
    assert psi(0, 40) == 40 * partition_count(40)


def test_psi_float_path():
    for n in (10, 50, 120):
        value = psi(1.5, n)
        assert isinstance(value, float)
        assert psi(1, n) < value < psi(2, n)
    with pytest.raises(ValueError):
        psi(2, 0)


def test_census_row_and_probabilities():
    row = census_row(5)
    assert (row.b, row.a, row.b1, row.a1, row.b2, row.a2) == (42, 27, 10, 10, 31, 19)
    assert row.p1 == 1
    assert row.p2 == Fraction(19, 31)
    assert row.pa == Fraction(27, 42)
    rows = list(census_rows(3, 7))
    assert [r.n for r in rows] == [3, 4, 5, 6, 7]
    with pytest.raises(ValueError):
        list(census_rows(5, 4))


def test_prime_case_probability_is_one():
    for p in primes_up_to(1000):
        if p >= 3:
            assert count_a1(p) == count_b1(p)


@given(st.integers(3, 500))
def test_p1_never_exceeds_one(n):
    row = census_row(n)
    assert 0 < row.p1 <= 1
    assert 0 < row.p2
    assert 0 < row.pa <= 1


def test_limit_diagnostics_p1():
    points = limit_diagnostics("p1", [5, 7, 30, 210, 2310])
    assert points[0].exact == 1
    assert points[1].exact == 1
    six_over_pi2 = 6 / math.pi**2
    primorials = [float(pt.exact) for pt in points[2:]]
    assert primorials[0] > primorials[1] > primorials[2]
    assert all(value > six_over_pi2 for value in primorials)


def test_limit_diagnostics_p2():
    points = limit_diagnostics("p2", [30, 210, 2310])
    values = [float(pt.exact) for pt in points]
    assert values[0] > values[1] > values[2]
    assert all(value > 24 / math.pi**2 for value in values)


def test_limit_diagnostics_pa():
    points = limit_diagnostics("pa", [50, 100, 150, 200, 255])
    for pt in points:
        assert 0 < float(pt.exact) < 1
    with pytest.raises(ValueError):
        limit_diagnostics("p3", [5])


def test_raw_generating_ratio_decreases_on_grid():
    ratios = [census_row(n).pa for n in (50, 100, 150, 200, 255)]
    assert all(x > y for x, y in zip(ratios, ratios[1:]))


def test_bound_report():
    report = bound_report(400)
    assert report.n_max == 400
    assert report.all_strict_hold()
    assert all(not fails for fails in report.strict_failures.values())
    # the for-large-n lower bounds at epsilon = 1/2 settle early and stay settled
    assert max(report.epsilon_failures["commutator_lower"]) == 87
    assert max(report.epsilon_failures["generating_lower"]) == 18
    with pytest.raises(ValueError):
        bound_report(2)


def test_significant_digits():
    assert significant_digits(Fraction(1)) == "1.00000"
    assert significant_digits(Fraction(9, 10)) == "0.900000"
    assert significant_digits(Fraction(1, 3)) == "0.333333"
    assert significant_digits(Fraction(2, 3)) == "0.666667"
    assert significant_digits(Fraction(19, 31), digits=3) == "0.613"
    assert significant_digits(Fraction(1234567)) == "1234570"
    assert significant_digits(Fraction(2000001, 2)) == "1000000"
    assert significant_digits(Fraction(2000003, 2)) == "1000000"
    assert significant_digits(Fraction(1, 1024), digits=4) == "0.0009766"
