"""Closed-form family counts, probability diagnostics, and inequality sweeps.

Six families of ordered pairs (s, t) in S_n x S_n are counted, each
normalized by n! (the raw counts are all divisible by n!):

  count_b   pairs whose commutator [s, t] is a 3-cycle;
  count_a   those pairs that also generate the alternating or symmetric group;
  count_b1  pairs in count_b with s an n-cycle;
  count_a1  generating pairs with s an n-cycle;
  count_b2  pairs in count_b with s a cycle of any length >= 2;
  count_a2  generating pairs with s a cycle of any length >= 2.

All formulas are exact integer arithmetic with explicit divisibility
checks; a non-integer intermediate would indicate a programming error,
never rounding.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import comb

from permcensus.arith import jordan_totient, sigma_table
from permcensus.partitions import partition_table


def _check_degree(n: int) -> None:
    if n < 3:
        raise ValueError(f"family counts need n >= 3, got {n}")


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise ArithmeticError(f"{what} is not an integer (this is a bug)")
    return num // den


def count_b1(n: int) -> int:
    """Pairs with 3-cycle commutator and s an n-cycle, over n!: C(n, 3)."""
    _check_degree(n)
    return comb(n, 3)


def count_a1(n: int) -> int:
    """Generating pairs with s an n-cycle, over n!: (n/6)(J_2(n) - 3 J_1(n))."""
    _check_degree(n)
    num = n * (jordan_totient(n, 2) - 3 * jordan_totient(n, 1))
    return _exact_div(num, 6, f"count_a1({n})")


def count_b2(n: int) -> int:
    """Pairs with 3-cycle commutator and s any cycle, over n!.

    Closed form (n-1)(n-2)(n^2 + 5n + 12)/24.
    """
    _check_degree(n)
    num = (n - 1) * (n - 2) * (n * n + 5 * n + 12)
    return _exact_div(num, 24, f"count_b2({n})")


def count_a2(n: int) -> int:
    """Generating pairs with s any cycle, over n!: count_a1(n) + (n+1)(n-2)/2."""
    _check_degree(n)
    return count_a1(n) + (n + 1) * (n - 2) // 2


_WEIGHT_TABLES: dict[int, list[int]] = {}


def _weight_table(a: int, bound: int) -> list[int]:
    """k^a * sigma(k) for k in 0..bound (cached, grow-on-demand)."""
    table = _WEIGHT_TABLES.get(a)
    if table is None or len(table) <= bound:
        top = max(bound, 2 * len(table) if table else 64)
        sig = sigma_table(top)
        table = [k**a * sig[k] for k in range(top + 1)]
        _WEIGHT_TABLES[a] = table
    return table


def count_b(n: int) -> int:
    """All pairs with 3-cycle commutator, over n!.

    (3/8) [ sum_k sigma_3(k) P(n-k)  -  2 sum_k k sigma(k) P(n-k)  +  n P(n) ],
    both sums over 1 <= k <= n.
    """
    _check_degree(n)
    table = partition_table(n)
    sig3 = sigma_table(n, 3)
    rev = table[n - 1 :: -1]
    s3 = sum(map(operator.mul, sig3[1 : n + 1], rev))
    s1 = sum(map(operator.mul, _weight_table(1, n)[1 : n + 1], rev))
    return _exact_div(3 * (s3 - 2 * s1 + n * table[n]), 8, f"count_b({n})")


def count_a(n: int) -> int:
    """All generating pairs with 3-cycle commutator, over n!: (3/8)(n-2) J_2(n)."""
    _check_degree(n)
    return _exact_div(3 * (n - 2) * jordan_totient(n, 2), 8, f"count_a({n})")


def psi(a, n: int):
    """psi_a(n) = sum over 1 <= k <= n of k^a sigma(k) P(n-k).

    Exact (an integer) for integer a; for non-integer a the powers k^a
    are evaluated in floating point and the float result is approximate.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    table = partition_table(n)
    if isinstance(a, int):
        weights = _weight_table(a, n)
        return sum(map(operator.mul, weights[1 : n + 1], table[n - 1 :: -1]))
    sig = sigma_table(n)
    exponent = float(a)
    return sum(k**exponent * sig[k] * table[n - k] for k in range(1, n + 1))


@dataclass(frozen=True)
class CensusRow:
    """All six normalized family counts at one degree."""

    n: int
    b: int
    a: int
    b1: int
    a1: int
    b2: int
    a2: int

    @property
    def p1(self) -> Fraction:
        """Probability that an n-cycle pair with 3-cycle commutator generates."""
        return Fraction(self.a1, self.b1)

    @property
    def p2(self) -> Fraction:
        """Probability that a cycle pair with 3-cycle commutator generates."""
        return Fraction(self.a2, self.b2)

    @property
    def pa(self) -> Fraction:
        """Probability that a pair with 3-cycle commutator generates."""
        return Fraction(self.a, self.b)


def census_row(n: int) -> CensusRow:
    """All six normalized counts at degree n."""
    return CensusRow(
        n=n,
        b=count_b(n),
        a=count_a(n),
        b1=count_b1(n),
        a1=count_a1(n),
        b2=count_b2(n),
        a2=count_a2(n),
    )


def census_rows(start: int, stop: int):
    """CensusRow for each n in start..stop inclusive."""
    if start > stop:
        raise ValueError(f"empty range {start}..{stop}")
    for n in range(start, stop + 1):
        yield census_row(n)


@dataclass(frozen=True)
class DiagnosticPoint:
    """One sampled value of a probability diagnostic, exact plus rendered."""

    n: int
    exact: Fraction

    @property
    def decimal(self) -> str:
        return significant_digits(self.exact)


def limit_diagnostics(kind: str, degrees) -> list[DiagnosticPoint]:
    """Sampled probability diagnostics.

    kind "p1" is a1/b1 (dips toward 6/pi^2 at degrees rich in small
    primes, returns to 1 at primes); kind "p2" is n*a2/b2 (same shape
    around 24/pi^2); kind "pa" is P(n)*a/(n*b), the generating
    probability rescaled by its decay rate.
    """
    out = []
    for n in degrees:
        _check_degree(n)
        if kind == "p1":
            exact = Fraction(count_a1(n), count_b1(n))
        elif kind == "p2":
            exact = Fraction(n * count_a2(n), count_b2(n))
        elif kind == "pa":
            exact = Fraction(partition_table(n)[n] * count_a(n), n * count_b(n))
        else:
            raise ValueError(f"unknown diagnostic {kind!r}; expected p1, p2 or pa")
        out.append(DiagnosticPoint(n, exact))
    return out


@dataclass(frozen=True)
class BoundReport:
    """Outcome of the inequality sweep over 3..n_max.

    strict_failures lists degrees violating inequalities that must hold
    at every n (empty means all good); epsilon_failures lists degrees
    where the for-large-n lower bounds (sampled at one epsilon) have not
    kicked in yet -- informational only.
    """

    n_max: int
    epsilon: float
    strict_failures: dict[str, list[int]]
    epsilon_failures: dict[str, list[int]]

    def all_strict_hold(self) -> bool:
        return not any(self.strict_failures.values())


def bound_report(n_max: int, epsilon: float = 0.5) -> BoundReport:
    """Check the psi sandwich and the count bounds for every 3 <= n <= n_max.

    Asserted (strict) inequalities:
      (8/3) count_b(n) < psi_2(n);  count_a(n) < (3/8) n^3;
      n P(n) <= psi_a(n) <= n^(a+1) P(n) for a in {0, 1, 2}.
    Reported only: psi_(2-eps)(n) < count_b(n) and n^(3-eps) < count_a(n),
    which hold for large n.
    """
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    strict: dict[str, list[int]] = {
        "commutator_upper": [],
        "generating_upper": [],
        "sandwich_a0": [],
        "sandwich_a1": [],
        "sandwich_a2": [],
    }
    eps_fail: dict[str, list[int]] = {
        "commutator_lower": [],
        "generating_lower": [],
    }
    table = partition_table(n_max)
    for n in range(3, n_max + 1):
        p_n = table[n]
        b_n = count_b(n)
        a_n = count_a(n)
        if not 8 * b_n < 3 * psi(2, n):
            strict["commutator_upper"].append(n)
        if not 8 * a_n < 3 * n**3:
            strict["generating_upper"].append(n)
        for a_exp in (0, 1, 2):
            value = psi(a_exp, n)
            if not n * p_n <= value <= n ** (a_exp + 1) * p_n:
                strict[f"sandwich_a{a_exp}"].append(n)
        if not psi(2 - epsilon, n) < b_n:
            eps_fail["commutator_lower"].append(n)
        if not n ** (3 - epsilon) < a_n:
            eps_fail["generating_lower"].append(n)
    return BoundReport(n_max, epsilon, strict, eps_fail)


def significant_digits(value, digits: int = 6) -> str:
    """Render an exact ratio with exactly `digits` significant digits.

    Rounding is half-even.  Values below 1 keep as many decimal places
    as needed; values at or above 10^digits are printed as rounded
    integers (still carrying only `digits` significant digits).
    """
    frac = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        dec = Decimal(frac.numerator) / Decimal(frac.denominator)
    places = max(0, digits - 1 - dec.adjusted())
    return f"{dec:.{places}f}"
