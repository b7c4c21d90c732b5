"""End-to-end acceptance checklist.

One test per criterion; run with -v to get a pass/fail line for each.
Every comparison is exact unless a numeric tolerance is stated in the
assertion itself.
"""

import math
import subprocess
import sys
from fractions import Fraction
from math import factorial, gcd

from permcensus.arith import (
    ArithSeq,
    dirichlet_convolve,
    divisors,
    euler_phi,
    factorize,
    jordan_totient,
    moebius,
    moebius_scaled_divisor_sum,
    primes_up_to,
    ramanujan_rhs,
    sigma_k,
    sigma_table,
)
from permcensus.census import bound_report, census_row, count_b
from permcensus.characters import character_value, frobenius_threecycle_sum
from permcensus.groups import generated, is_primitive
from permcensus.oracle import brute_count, brute_triple_counts, brute_twist_count
from permcensus.origami import (
    OneCylParams,
    TwoCylParams,
    build_one_cylinder,
    build_two_cylinder,
    one_cylinder_primitive,
    twist_count,
    two_cylinder_primitive,
)
from permcensus.partitions import partition_count, partition_table

FAMILY_FIELDS = {"B": "b", "A": "a", "B1": "b1", "A1": "a1", "B2": "b2", "A2": "a2"}


def formula_counts(n):
    row = census_row(n)
    return {family: getattr(row, field) for family, field in FAMILY_FIELDS.items()}


def test_criterion_01_formula_oracle_exactness():
    for n in range(3, 8):
        expected = formula_counts(n)
        for family, value in expected.items():
            pairs = brute_count(n, family)
            assert pairs == value * factorial(n), (n, family)


def test_criterion_02_known_small_values():
    assert count_b(3) == 3 and brute_count(3, "B") == 3 * 6
    assert census_row(3).a == 3 and brute_count(3, "A") == 3 * 6
    assert count_b(4) == 12 and brute_count(4, "B") == 12 * 24
    assert census_row(4).a == 9 and brute_count(4, "A") == 9 * 24
    assert census_row(4).b1 == 4 and brute_count(4, "B1") == 4 * 24


def test_criterion_03_prime_case_identity():
    for p in primes_up_to(1000):
        if p >= 3:
            row = census_row(p)
            assert row.p1 == 1, p
    for p in (3, 5, 7):
        assert brute_count(p, "A1") == brute_count(p, "B1")


def test_criterion_04_arithmetic_identity_suite():
    bound = 500
    one = ArithSeq.tabulate(lambda n: 1, bound)
    mu = ArithSeq.tabulate(moebius, bound)
    phi = ArithSeq.tabulate(euler_phi, bound)
    ident = ArithSeq.tabulate(lambda n: n, bound)
    id2 = ArithSeq.tabulate(lambda n: n * n, bound)
    id3 = ArithSeq.tabulate(lambda n: n**3, bound)
    j2 = ArithSeq.tabulate(lambda n: jordan_totient(n, 2), bound)
    j3 = ArithSeq.tabulate(lambda n: jordan_totient(n, 3), bound)
    tau = ArithSeq.tabulate(lambda n: sigma_k(n, 0), bound)
    sig1 = ArithSeq.tabulate(lambda n: sigma_k(n, 1), bound)
    sig2 = ArithSeq.tabulate(lambda n: sigma_k(n, 2), bound)
    eps = ArithSeq.tabulate(lambda n: 1 if n == 1 else 0, bound)

    assert dirichlet_convolve(one, one) == tau
    assert dirichlet_convolve(one, ident) == sig1
    assert dirichlet_convolve(one, id2) == sig2
    assert dirichlet_convolve(one, mu) == eps
    assert dirichlet_convolve(one, phi) == ident
    assert dirichlet_convolve(one, j2) == id2
    assert dirichlet_convolve(one, j3) == id3
    assert dirichlet_convolve(ident, mu) == phi
    assert dirichlet_convolve(id2, mu) == j2
    assert dirichlet_convolve(mu, sig1) == ident
    assert dirichlet_convolve(tau, phi) == sig1
    assert dirichlet_convolve(ident.pointwise(mu), sig1) == one
    assert dirichlet_convolve(ident.pointwise(mu), phi) == mu

    for n in range(1, bound + 1):
        product = Fraction(1)
        for p, _ in factorize(n):
            product *= 1 - Fraction(1, p * p)
        assert moebius_scaled_divisor_sum(n, 2) == product

    # complete multiplicativity distributes over convolution
    small = 300
    f = ArithSeq.tabulate(lambda n: n * n, small)
    g = ArithSeq(one.values[: small + 1])
    h = ArithSeq(phi.values[: small + 1])
    assert f.pointwise(dirichlet_convolve(g, h)) == dirichlet_convolve(
        f.pointwise(g), f.pointwise(h)
    )

    big = 5000
    s1 = sigma_table(big, 1)
    s3 = sigma_table(big, 3)
    for n in range(1, big + 1):
        head = s1[1:n]
        assert sum(map(int.__mul__, head, s1[n - 1 : 0 : -1])) == ramanujan_rhs(
            n, "deg1"
        )
        assert sum(map(int.__mul__, head, s3[n - 1 : 0 : -1])) == ramanujan_rhs(
            n, "deg3"
        )


def test_criterion_05_partition_suite():
    expected = (1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385)
    for n, value in enumerate(expected, start=1):
        assert partition_count(n) == value
    bound = 5000
    table = partition_table(bound)
    sig = sigma_table(bound, 1)
    for n in range(1, bound + 1):
        conv = sum(map(int.__mul__, sig[1:n], table[n - 1 : 0 : -1]))
        assert conv == n * table[n] - sig[n]


def test_criterion_06_origami_criterion_equivalence():
    for m in range(3, 13):
        for k in range(1, 12 // m + 1):
            for a in range(1, m - 1):
                for b in range(1, m - a):
                    params = OneCylParams(k, a, b, m - a - b)
                    s, t = build_one_cylinder(params)
                    assert one_cylinder_primitive(params) == is_primitive(
                        generated(s, t)
                    ), params
    for k in range(1, 11):
        for ell in range(k + 1, 12):
            for a in range(1, 12):
                for b in range(1, 12):
                    if a * k + b * ell > 11:
                        break
                    for alpha in range(k):
                        for beta in range(ell):
                            params = TwoCylParams(a, b, k, ell, alpha, beta)
                            s, t = build_two_cylinder(params)
                            assert two_cylinder_primitive(params) == is_primitive(
                                generated(s, t)
                            ), params


def test_criterion_07_twist_counting():
    samples = [(1, 1), (1, 2), (2, 3), (3, 4), (2, 5)]
    for k in range(1, 31):
        for ell in range(1, 31):
            for a, b in samples:
                assert twist_count(a, b, k, ell) == brute_twist_count(a, b, k, ell)


def test_criterion_08_counting_lemmas():
    for n in range(3, 61):
        for d in divisors(n):
            m = n // d
            assert brute_triple_counts(n, "step_divisor", d) == d * m * (m - 1) * (
                m - 2
            ) // 6
        expected = n * (jordan_totient(n, 2) - 3 * jordan_totient(n, 1)) // 6
        assert brute_triple_counts(n, "coprime_gap") == expected


def test_criterion_09_frobenius_identity():
    assert character_value((2, 1), (3,)) == -1
    assert character_value((2, 1, 1), (4,)) == 1
    assert character_value((3, 1), (4,)) == -1
    for n in range(3, 8):
        class_size = n * (n - 1) * (n - 2) // 3
        lhs = factorial(n) * class_size * frobenius_threecycle_sum(n)
        assert lhs == count_b(n) * factorial(n)


def test_criterion_10_p1_limit_at_2310():
    value = float(census_row(2310).p1)
    assert abs(value - 6 / math.pi**2) < 1e-2


def test_criterion_10_p2_limit_at_2310():
    row = census_row(2310)
    value = float(2310 * row.p2)
    assert abs(value - 24 / math.pi**2) < 5e-2


def test_criterion_10_generating_ratio_strictly_decreasing():
    grid = (50, 100, 150, 200, 255)
    ratios = [census_row(n).pa for n in grid]
    assert all(x > y for x, y in zip(ratios, ratios[1:]))


def test_criterion_11_bound_suite():
    report = bound_report(2000)
    assert report.all_strict_hold()
    sig1 = sigma_table(5000, 1)
    sig3 = sigma_table(5000, 3)
    for n in range(2, 5001):
        assert n * euler_phi(n) * sig1[n] < sig3[n] < n * n * sig1[n]


def test_criterion_12_determinism_across_thread_counts():
    def run(threads):
        return subprocess.run(
            [
                sys.executable, "-m", "permcensus", "census",
                "--from", "3", "--to", "255", "--threads", str(threads),
            ],
            capture_output=True,
        )
    single = run(1)
    pooled = run(4)
    assert single.returncode == 0 and pooled.returncode == 0
    assert single.stdout == pooled.stdout
