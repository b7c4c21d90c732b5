"""Brute-force enumeration over S_n x S_n grounding the closed-form counts.

Everything here is deliberately independent of the formulas: pairs are
enumerated, commutators computed pointwise, and generation tested via
the group machinery.  Degrees run 3..8; n = 8 (40320^ish work items)
must be requested explicitly.
"""

from __future__ import annotations

from itertools import permutations as all_images
from math import gcd
from typing import Callable

from permcensus import groups
from permcensus.partitions import enumerate_partitions
from permcensus.perm import Permutation, conjugacy_class_size

FAMILIES = ("B", "A", "B1", "A1", "B2", "A2")

_MAX_DEGREE = 8
_MAX_FULL_DEGREE = 6


def _rep_from_flag(flag: tuple[int, ...], n: int) -> tuple[int, ...]:
    """A canonical permutation with the given cycle lengths: consecutive blocks."""
    img = list(range(1, n + 1))
    start = 1
    for length in flag:
        for offset in range(length):
            img[start + offset - 1] = start + (offset + 1) % length
        start += length
    return tuple(img)


def _commutator_moves_three(s: tuple[int, ...], s_inv: tuple[int, ...],
                            t: tuple[int, ...], t_inv: tuple[int, ...]) -> bool:
    """Whether s t s^-1 t^-1 moves exactly three points."""
    moved = 0
    for x in range(len(s)):
        if s[t[s_inv[t_inv[x] - 1] - 1] - 1] != x + 1:
            moved += 1
            if moved > 3:
                return False
    return moved == 3


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    img = [0] * len(p)
    for x, y in enumerate(p, start=1):
        img[y - 1] = x
    return tuple(img)


def _s_filter(family: str, flag: tuple[int, ...]) -> bool:
    """Whether permutations of this cycle type can appear as s in the family."""
    if family in ("B1", "A1"):
        return len(flag) == 1
    if family in ("B2", "A2"):
        return sum(1 for length in flag if length > 1) == 1
    return True


def brute_count(
    n: int,
    family: str,
    *,
    full: bool = False,
    allow_n8: bool = False,
    progress: Callable[[tuple[int, ...]], None] | None = None,
    cancelled: Callable[[], bool] | None = None,
) -> int:
    """The exact number of ordered pairs (s, t) in S_n x S_n in the family.

    Families: "B" commutator is a 3-cycle; "B1"/"B2" additionally s is an
    n-cycle / any cycle; "A"/"A1"/"A2" the corresponding pairs that also
    generate the alternating or symmetric group.

    By default the outer loop visits one representative s per conjugacy
    class and scales by the class size (every family predicate is
    invariant under simultaneous conjugation); full=True forces the
    plain double loop and is limited to n <= 6.  progress, when given,
    is called once per finished work item (outer class or outer s);
    cancelled is polled between work items and aborts via RuntimeError.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not 3 <= n <= _MAX_DEGREE:
        raise ValueError(f"degree must lie in 3..{_MAX_DEGREE}, got {n}")
    if n == _MAX_DEGREE and not allow_n8:
        raise ValueError("degree 8 is expensive; pass allow_n8=True to run it")
    if full and n > _MAX_FULL_DEGREE:
        raise ValueError(f"full double loop is limited to n <= {_MAX_FULL_DEGREE}")

    need_generation = family in ("A", "A1", "A2")
    points = tuple(range(1, n + 1))

    def count_t_loop(s_img: tuple[int, ...]) -> int:
        s_inv = _invert(s_img)
        s_perm = Permutation(s_img) if need_generation else None
        hits = 0
        for t_img in all_images(points):
            t_inv = _invert(t_img)
            if not _commutator_moves_three(s_img, s_inv, t_img, t_inv):
                continue
            if need_generation:
                verdict = groups.generates_alt_or_sym(s_perm, Permutation(t_img))
                if verdict == groups.NEITHER:
                    continue
            hits += 1
        return hits

    total = 0
    if full:
        for s_img in all_images(points):
            if cancelled is not None and cancelled():
                raise RuntimeError("brute_count cancelled")
            flag = _flag_of(s_img)
            if _s_filter(family, flag):
                total += count_t_loop(s_img)
            if progress is not None:
                progress(s_img)
        return total

    for flag_list in enumerate_partitions(n):
        flag = tuple(flag_list)
        if cancelled is not None and cancelled():
            raise RuntimeError("brute_count cancelled")
        if _s_filter(family, flag):
            rep = _rep_from_flag(flag, n)
            total += conjugacy_class_size(flag) * count_t_loop(rep)
        if progress is not None:
            progress(flag)
    return total


def _flag_of(img: tuple[int, ...]) -> tuple[int, ...]:
    n = len(img)
    seen = bytearray(n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = 1
            cur = img[cur - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def brute_triple_counts(n: int, kind: str, d: int | None = None) -> int:
    """Count triples x < y < z in 1..n by direct triple loop.

    kind "step_divisor" (requires d | n): both gaps y - x and z - y are
    multiples of d.  kind "coprime_gap": gcd(y - x, z - y, n) = 1.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if kind == "step_divisor":
        if d is None or d < 1 or n % d:
            raise ValueError(f"step_divisor needs a divisor d of n, got d = {d}")
        return sum(
            1
            for x in range(1, n + 1)
            for y in range(x + 1, n + 1)
            if (y - x) % d == 0
            for z in range(y + 1, n + 1)
            if (z - y) % d == 0
        )
    if kind == "coprime_gap":
        if d is not None:
            raise ValueError("coprime_gap takes no divisor argument")
        return sum(
            1
            for x in range(1, n + 1)
            for y in range(x + 1, n + 1)
            for z in range(y + 1, n + 1)
            if gcd(y - x, gcd(z - y, n)) == 1
        )
    raise ValueError(f"unknown kind {kind!r}; expected step_divisor or coprime_gap")


def brute_twist_count(a: int, b: int, k: int, ell: int) -> int:
    """Count twists (alpha, beta) with gcd(k, ell, a*beta - b*alpha) = 1 directly."""
    if min(a, b, k, ell) < 1:
        raise ValueError("all parameters must be >= 1")
    if gcd(a, b) != 1:
        raise ValueError(f"heights must be coprime, got gcd({a}, {b}) != 1")
    return sum(
        1
        for alpha in range(k)
        for beta in range(ell)
        if gcd(k, gcd(ell, abs(a * beta - b * alpha))) == 1
    )
