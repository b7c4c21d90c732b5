"""Permutations of {1, ..., n}: composition, cycles, distances, commutators.

Points are 1-based everywhere.  A Permutation stores its image table;
disjoint-cycle data is ordered by (and each cycle started at) its
minimal element, so printed forms are canonical.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; image[x - 1] is the image of the point x."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError("image table is not a bijection of 1..n")

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.degree:
            raise ValueError(f"point {x} outside 1..{self.degree}")
        return self.image[x - 1]

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.image, start=1))

    def __str__(self) -> str:
        return cycles_string(self)


def identity(n: int) -> Permutation:
    """The identity permutation of degree n."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def _check_same_degree(s: Permutation, t: Permutation) -> int:
    if s.degree != t.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {t.degree}")
    return s.degree


def compose(s: Permutation, t: Permutation) -> Permutation:
    """The product s o t (t applied first)."""
    n = _check_same_degree(s, t)
    si, ti = s.image, t.image
    return Permutation(tuple(si[ti[x] - 1] for x in range(n)))


def inverse(s: Permutation) -> Permutation:
    """The inverse permutation."""
    img = [0] * s.degree
    for x, y in enumerate(s.image, start=1):
        img[y - 1] = x
    return Permutation(tuple(img))


def commutator(s: Permutation, t: Permutation) -> Permutation:
    """[s, t] = s o t o s^-1 o t^-1."""
    return compose(compose(s, t), compose(inverse(s), inverse(t)))


def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
    """Build a permutation from disjoint cycles; omitted points stay fixed."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    img = list(range(1, degree + 1))
    seen: set[int] = set()
    for cycle in cycles:
        pts = list(cycle)
        for p in pts:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} outside 1..{degree}")
            if p in seen:
                raise ValueError(f"cycles are not disjoint at point {p}")
            seen.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b
    return Permutation(tuple(img))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like "(1 2 3)(7 8 9)"; commas also separate points."""
    leftovers = _CYCLE_RE.sub("", text)
    if leftovers.strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for group in _CYCLE_RE.findall(text):
        pts = [int(tok) for tok in re.split(r"[,\s]+", group.strip()) if tok]
        if pts:
            cycles.append(pts)
    return from_cycles(cycles, degree)


def cycles_string(s: Permutation, include_fixed: bool = False) -> str:
    """Canonical cycle notation; "()" for the identity."""
    parts = []
    for cycle in cycle_structure(s).cycles:
        if len(cycle) == 1 and not include_fixed:
            continue
        parts.append("(" + " ".join(str(p) for p in cycle) + ")")
    return "".join(parts) if parts else "()"


@dataclass(frozen=True)
class CycleStructure:
    """Disjoint cycles covering 1..n, ordered by (and started at) minimal elements."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def flag(self) -> tuple[int, ...]:
        """Cycle lengths as a nondecreasing tuple (a partition of the degree)."""
        return tuple(sorted(len(c) for c in self.cycles))

    @property
    def type(self) -> dict[int, int]:
        """Map cycle length -> multiplicity."""
        counts = Counter(len(c) for c in self.cycles)
        return dict(sorted(counts.items()))


def cycle_structure(s: Permutation) -> CycleStructure:
    """Disjoint cycle decomposition (fixed points included as 1-cycles)."""
    n = s.degree
    img = s.image
    seen = bytearray(n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = 1
        nxt = img[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = 1
            nxt = img[nxt - 1]
        cycles.append(tuple(cycle))
    return CycleStructure(tuple(cycles))


def signature(s: Permutation) -> int:
    """+1 for even permutations, -1 for odd ones."""
    return -1 if (s.degree - len(cycle_structure(s).cycles)) % 2 else 1


def s_distance(s: Permutation, x: int, y: int) -> int | float:
    """The least d >= 1 with s^d(x) = y, or math.inf when x, y share no cycle.

    In particular s_distance(s, x, x) is the length of the cycle through x,
    and x, y share a cycle exactly when the value is finite.
    """
    if not (1 <= x <= s.degree and 1 <= y <= s.degree):
        raise ValueError(f"points must lie in 1..{s.degree}")
    img = s.image
    cur = img[x - 1]
    d = 1
    while cur != y and cur != x:
        cur = img[cur - 1]
        d += 1
    return d if cur == y else math.inf


def conjugacy_class_size(flag: Iterable[int], degree: int | None = None) -> int:
    """The number of permutations in S_n with the given multiset of cycle lengths.

    Equals n! / prod over lengths l of (l^m_l * m_l!) where m_l is the
    multiplicity of l.
    """
    lengths = tuple(sorted(flag))
    if not lengths or any(l < 1 for l in lengths):
        raise ValueError("cycle lengths must be positive integers")
    n = sum(lengths)
    if degree is not None and degree != n:
        raise ValueError(f"cycle lengths sum to {n}, not the stated degree {degree}")
    denom = 1
    for length, mult in Counter(lengths).items():
        denom *= length**mult * factorial(mult)
    return factorial(n) // denom


@dataclass(frozen=True)
class CaseA:
    """All three commutator points lie in one cycle of s.

    x is the smallest of the three points, the commutator maps z -> y ->
    x -> z, and segments = (d(x,y), d(y,z), d(z,x)) are the s-distances
    around the shared cycle; they sum to its length.
    """

    x: int
    y: int
    z: int
    segments: tuple[int, int, int]


@dataclass(frozen=True)
class CaseB:
    """x and y share a cycle of s; z lies alone in a cycle of length d(y, x).

    The commutator maps z -> y -> x -> z.  short_length is the length of
    z's cycle, which equals the s-distance from y to x.
    """

    x: int
    y: int
    z: int
    short_length: int


def classify_commutator(s: Permutation, t: Permutation) -> CaseA | CaseB:
    """Sort a pair whose commutator is a 3-cycle into one of two shapes.

    Writing [s, t] = (z y x), either all three moved points lie in a
    single cycle of s with d(x,y) + d(y,z) + d(z,x) equal to the cycle
    length (CaseA), or two of them share a cycle and the third sits in a
    cycle of length d(y, x) (CaseB).  Raises ValueError when [s, t] is
    not a 3-cycle or the distance relations fail.
    """
    c = commutator(s, t)
    moved = [x for x in range(1, c.degree + 1) if c(x) != x]
    if len(moved) != 3:
        raise ValueError("commutator is not a 3-cycle")

    x = moved[0]
    z = c(x)
    y = c(z)
    a = s_distance(s, x, y)
    b = s_distance(s, y, z)
    cc = s_distance(s, z, x)
    if math.isfinite(a) and math.isfinite(b) and math.isfinite(cc):
        if a + b + cc != s_distance(s, x, x):
            raise ValueError("three points share a cycle but segments do not close up")
        return CaseA(x, y, z, (int(a), int(b), int(cc)))

    shared = [
        (u, v)
        for i, u in enumerate(moved)
        for v in moved[i + 1 :]
        if math.isfinite(s_distance(s, u, v))
    ]
    if len(shared) != 1:
        raise ValueError("moved points do not form a one-cycle or two-cycle pattern")
    lone = next(p for p in moved if p not in shared[0])
    z = lone
    y = c(z)
    x = c(y)
    k = s_distance(s, z, z)
    if k != s_distance(s, y, x):
        raise ValueError("lone point's cycle length does not match d(y, x)")
    return CaseB(x, y, z, int(k))
