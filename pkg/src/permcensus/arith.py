"""Multiplicative arithmetic functions and their convolution algebra.

Everything is exact: functions return plain integers where the value is
an integer and fractions.Fraction otherwise.  Tabulated sequences
(ArithSeq) hold Fraction values so that Dirichlet inverses stay closed
under the operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((prime, exponent), ...), primes ascending."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def sigma_k(n: int, k: int) -> int:
    """Sum of the k-th powers of the positive divisors of n (k >= 0)."""
    if k < 0:
        raise ValueError(f"sigma_k expects k >= 0, got {k}")
    result = 1
    for p, e in factorize(n):
        if k == 0:
            result *= e + 1
        else:
            pk = p**k
            result *= (pk ** (e + 1) - 1) // (pk - 1)
    return result


def moebius(n: int) -> int:
    """The Moebius function: (-1)^(#prime factors) on squarefree n, else 0."""
    result = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        result = -result
    return result


def jordan_totient(n: int, k: int) -> int:
    """J_k(n) = n^k * prod over primes p | n of (1 - p^-k), exactly (k >= 1)."""
    if k < 1:
        raise ValueError(f"jordan_totient expects k >= 1, got {k}")
    result = n**k
    for p, _ in factorize(n):
        pk = p**k
        result = result // pk * (pk - 1)
    return result


def euler_phi(n: int) -> int:
    """Euler's totient (the k = 1 Jordan totient)."""
    return jordan_totient(n, 1)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending (simple sieve)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [p for p in range(2, limit + 1) if flags[p]]


def first_primes(count: int) -> list[int]:
    """The first `count` primes."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    limit = 16
    while True:
        primes = primes_up_to(limit)
        if len(primes) >= count:
            return primes[:count]
        limit *= 2


_SIGMA_TABLES: dict[int, list[int]] = {}


def sigma_table(bound: int, k: int = 1) -> list[int]:
    """sigma_k(i) for i in 0..bound as a list (slot 0 holds 0).

    The table is cached per k and regrown on demand; treat the returned
    list as read-only.
    """
    table = _SIGMA_TABLES.get(k)
    if table is None or len(table) <= bound:
        top = max(bound, 2 * len(table) if table else 64)
        fresh = [0] * (top + 1)
        for d in range(1, top + 1):
            dk = d**k
            for m in range(d, top + 1, d):
                fresh[m] += dk
        _SIGMA_TABLES[k] = fresh
        return fresh
    return table


@dataclass(frozen=True)
class ArithSeq:
    """An arithmetic function eagerly tabulated on 1..bound.

    values[n] is f(n); slot 0 is unused padding so that indices match
    arguments.
    """

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) < 2:
            raise ValueError("ArithSeq needs at least the value at n = 1")

    @classmethod
    def tabulate(cls, func: Callable[[int], int | Fraction], bound: int) -> "ArithSeq":
        """Tabulate func on 1..bound."""
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        vals = [Fraction(0)]
        vals.extend(Fraction(func(n)) for n in range(1, bound + 1))
        return cls(tuple(vals))

    @property
    def bound(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 1 <= n <= self.bound:
            raise IndexError(f"n = {n} outside tabulated range 1..{self.bound}")
        return self.values[n]

    def pointwise(self, other: "ArithSeq") -> "ArithSeq":
        """The pointwise product (f.g)(n) = f(n) g(n)."""
        _check_same_bound(self, other)
        vals = [Fraction(0)]
        vals.extend(a * b for a, b in zip(self.values[1:], other.values[1:]))
        return ArithSeq(tuple(vals))


def _check_same_bound(f: ArithSeq, g: ArithSeq) -> None:
    if f.bound != g.bound:
        raise ValueError(f"bound mismatch: {f.bound} vs {g.bound}")


def dirichlet_convolve(f: ArithSeq, g: ArithSeq, bound: int | None = None) -> ArithSeq:
    """Dirichlet convolution (f*g)(n) = sum over d | n of f(d) g(n/d)."""
    _check_same_bound(f, g)
    n_max = f.bound if bound is None else bound
    if not 1 <= n_max <= f.bound:
        raise ValueError(f"bound mismatch: requested {n_max}, tabulated {f.bound}")
    out = [Fraction(0)] * (n_max + 1)
    fv, gv = f.values, g.values
    for d in range(1, n_max + 1):
        fd = fv[d]
        if not fd:
            continue
        for m in range(d, n_max + 1, d):
            out[m] += fd * gv[m // d]
    return ArithSeq(tuple(out))


def dirichlet_inverse(f: ArithSeq, bound: int | None = None) -> ArithSeq:
    """The inverse of f under Dirichlet convolution; requires f(1) != 0.

    Built by the recurrence g(1) = 1/f(1) and, for n > 1,
    g(n) = -(1/f(1)) * sum over proper divisors d of n of g(d) f(n/d).
    """
    if f.values[1] == 0:
        raise ValueError("not invertible: f(1) = 0")
    n_max = f.bound if bound is None else bound
    if not 1 <= n_max <= f.bound:
        raise ValueError(f"bound mismatch: requested {n_max}, tabulated {f.bound}")
    lead = f.values[1]
    inv = [Fraction(0)] * (n_max + 1)
    inv[1] = Fraction(1) / lead
    for n in range(2, n_max + 1):
        acc = sum((inv[d] * f.values[n // d] for d in divisors(n) if d < n), Fraction(0))
        inv[n] = -acc / lead
    return ArithSeq(tuple(inv))


def discrete_convolve(f: ArithSeq, g: ArithSeq, n: int) -> Fraction:
    """The additive convolution sum over 0 < k < n of f(k) g(n-k); zero at n = 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return Fraction(0)
    if f.bound < n - 1 or g.bound < n - 1:
        raise ValueError(f"operands must be tabulated on 1..{n - 1}")
    fv, gv = f.values, g.values
    return sum((fv[k] * gv[n - k] for k in range(1, n)), Fraction(0))


def ramanujan_rhs(n: int, order: str) -> Fraction:
    """Closed form for the additive self-convolutions of divisor sums.

    order "deg1" gives the value of sum_{0<k<n} sigma(k) sigma(n-k):
        5/12 sigma_3(n) + 1/12 sigma(n) - 1/2 n sigma(n)
    order "deg3" gives sum_{0<k<n} sigma(k) sigma_3(n-k):
        7/80 sigma_5(n) + 1/24 sigma_3(n) - 1/240 sigma(n) - 1/8 n sigma_3(n)
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if order == "deg1":
        return (
            Fraction(5, 12) * sigma_k(n, 3)
            + Fraction(1, 12) * sigma_k(n, 1)
            - Fraction(n, 2) * sigma_k(n, 1)
        )
    if order == "deg3":
        return (
            Fraction(7, 80) * sigma_k(n, 5)
            + Fraction(1, 24) * sigma_k(n, 3)
            - Fraction(1, 240) * sigma_k(n, 1)
            - Fraction(n, 8) * sigma_k(n, 3)
        )
    raise ValueError(f"unknown order {order!r}; expected 'deg1' or 'deg3'")


def useful_sum_knk(n: int) -> int:
    """sum over k = 2..n of k(n-k), in closed form (n+3)(n-1)(n-2)/6."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return (n + 3) * (n - 1) * (n - 2) // 6


def _falling_sum(n: int, r: int) -> int:
    """sum over k = 1..n of k(k-1)...(k-r), telescoped to (n+1)n...(n-r)/(r+2)."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    num = 1
    for j in range(n - r, n + 2):
        num *= j
    return num // (r + 2)


def moebius_scaled_divisor_sum(n: int, k: int) -> Fraction:
    """sum over d | n of mu(d) / d^k, equal to prod over p | n of (1 - p^-k)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return sum(
        (Fraction(moebius(d), d**k) for d in divisors(n)), Fraction(0)
    )


def seq_values(values: Iterable[int]) -> ArithSeq:
    """ArithSeq from explicit values f(1), f(2), ... (convenience wrapper)."""
    vals = [Fraction(0)]
    vals.extend(Fraction(v) for v in values)
    return ArithSeq(tuple(vals))
