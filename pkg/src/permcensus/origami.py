"""Square-tiled surfaces encoded by permutation pairs with 3-cycle commutators.

A surface of n unit squares is a pair (s, t): s glues each square to its
right-hand neighbour, t to its upper neighbour.  The pairs of interest
decompose into horizontal cylinders in exactly two ways:

* one cylinder of k rows whose circumference m splits into three marked
  segments a + b + c = m;
* two cylinders of widths k < l and heights a, b, glued along three
  marked segments and rotated against each other by twists alpha, beta.

Builders produce a canonical numbering (each row a consecutive block,
bottom to top), classify_origami inverts them, and the primitivity
predicates decide when the surface is not a proper cover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

from permcensus import groups
from permcensus.arith import euler_phi
from permcensus.perm import (
    CaseA,
    CaseB,
    Permutation,
    classify_commutator,
    cycle_structure,
    s_distance,
)


@dataclass(frozen=True)
class OneCylParams:
    """One-cylinder shape: k rows of circumference a + b + c."""

    k: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.k, self.a, self.b, self.c) < 1:
            raise ValueError("all one-cylinder parameters must be >= 1")

    @property
    def n(self) -> int:
        return self.k * (self.a + self.b + self.c)


@dataclass(frozen=True)
class TwoCylParams:
    """Two-cylinder shape: heights a, b; widths k < ell; twists alpha, beta."""

    a: int
    b: int
    k: int
    ell: int
    alpha: int
    beta: int

    def __post_init__(self):
        if min(self.a, self.b, self.k) < 1:
            raise ValueError("heights and widths must be >= 1")
        if not self.k < self.ell:
            raise ValueError(f"need k < ell, got k = {self.k}, ell = {self.ell}")
        if not 0 <= self.alpha < self.k:
            raise ValueError(f"alpha must lie in [0, k), got {self.alpha}")
        if not 0 <= self.beta < self.ell:
            raise ValueError(f"beta must lie in [0, ell), got {self.beta}")

    @property
    def n(self) -> int:
        return self.a * self.k + self.b * self.ell


@dataclass(frozen=True)
class Origami:
    """A square-tiled surface given by its right and up gluing permutations."""

    s: Permutation
    t: Permutation

    def __post_init__(self):
        if self.s.degree != self.t.degree:
            raise ValueError("gluing permutations must share a degree")

    @property
    def n(self) -> int:
        return self.s.degree

    def is_connected(self) -> bool:
        return groups.is_transitive(groups.GeneratedGroup(self.n, (self.s, self.t)))


def build_one_cylinder(params: OneCylParams) -> tuple[Permutation, Permutation]:
    """Canonical pair for a one-cylinder surface; its commutator is a 3-cycle.

    Squares are numbered row by row from the bottom, left to right; each
    row is an s-cycle.  Rows map straight up under t, and the top row
    closes onto the bottom row re-ordered as [first a columns, last c
    columns, middle b columns].  The commutator is then the 3-cycle on
    the bottom-row points 1, a+1 and a+b+1 sending
    (a+b+1) -> (a+1) -> 1 -> (a+b+1).
    """
    k, a, b, c = params.k, params.a, params.b, params.c
    m = a + b + c
    n = k * m
    s_img = [0] * n
    t_img = [0] * n
    for r in range(k):
        for j in range(m):
            sq = r * m + j
            s_img[sq] = r * m + (j + 1) % m + 1
            if r < k - 1:
                t_img[sq] = sq + m + 1
    bottom = list(range(1, m + 1))
    closing = bottom[:a] + bottom[a + b :] + bottom[a : a + b]
    top_base = (k - 1) * m
    for j in range(m):
        t_img[top_base + j] = closing[j]
    return Permutation(tuple(s_img)), Permutation(tuple(t_img))


def build_two_cylinder(params: TwoCylParams) -> tuple[Permutation, Permutation]:
    """Canonical pair for a two-cylinder surface; its commutator is a 3-cycle.

    The short cylinder (width k, height a) occupies squares 1..ak, its
    bottom row being the marked z-segment; the tall cylinder (width ell,
    height b) follows, its bottom row listing the y-segment (k squares)
    then the x-segment (ell - k squares).  Interior rows map straight up.
    The short top lands on the y-segment shifted by alpha; the tall top
    lands on [z-row, x-segment] shifted by beta.  For every twist the
    commutator is the 3-cycle on z1 = 1, y1 = ak+1, x1 = ak+k+1 sending
    z1 -> y1 -> x1 -> z1.
    """
    a, b, k, ell = params.a, params.b, params.k, params.ell
    alpha, beta = params.alpha, params.beta
    n = a * k + b * ell
    s_img = [0] * n
    t_img = [0] * n
    for r in range(a):
        for i in range(k):
            sq = r * k + i
            s_img[sq] = r * k + (i + 1) % k + 1
            if r < a - 1:
                t_img[sq] = sq + k + 1
    base = a * k
    for r in range(b):
        for j in range(ell):
            sq = base + r * ell + j
            s_img[sq] = base + r * ell + (j + 1) % ell + 1
            if r < b - 1:
                t_img[sq] = sq + ell + 1
    y_row = [base + i + 1 for i in range(k)]
    x_row = [base + k + i + 1 for i in range(ell - k)]
    z_row = list(range(1, k + 1))
    short_top = (a - 1) * k
    for i in range(k):
        t_img[short_top + i] = y_row[(i - alpha) % k]
    closing = z_row + x_row
    tall_top = base + (b - 1) * ell
    for j in range(ell):
        t_img[tall_top + j] = closing[(j - beta) % ell]
    return Permutation(tuple(s_img)), Permutation(tuple(t_img))


def classify_origami(s: Permutation, t: Permutation) -> OneCylParams | TwoCylParams:
    """Recover cylinder parameters from a connected pair with 3-cycle commutator.

    Inverts the builders: the commutator's moved points locate the marked
    segments, the s-cycle lengths give widths and heights, and for two
    cylinders the twists are read off from where t carries the marked
    bottom points across the gluing.  Raises ValueError when the pair is
    disconnected, the commutator is not a 3-cycle, or the cycle data is
    inconsistent with both shapes.
    """
    if s.degree != t.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {t.degree}")
    n = s.degree
    if not groups.is_transitive(groups.GeneratedGroup(n, (s, t))):
        raise ValueError("surface is not connected")
    case = classify_commutator(s, t)
    lengths = sorted(len(c) for c in cycle_structure(s).cycles)

    if isinstance(case, CaseA):
        a, b, c = case.segments
        m = a + b + c
        if any(length != m for length in lengths):
            raise ValueError("one-cylinder shape needs all s-cycles of equal length")
        return OneCylParams(n // m, a, b, c)

    x, y, z = case.x, case.y, case.z
    k = case.short_length
    ell_dist = s_distance(s, x, x)
    if not math.isfinite(ell_dist):
        raise ValueError("x must lie on a finite cycle")
    ell = int(ell_dist)
    if k >= ell:
        raise ValueError("two-cylinder shape needs the lone cycle strictly shorter")
    a = lengths.count(k)
    b = lengths.count(ell)
    if a + b != len(lengths):
        raise ValueError("two-cylinder shape allows only cycle lengths k and ell")

    up = z
    for _ in range(a):
        up = t(up)
    steps_y = 0 if up == y else s_distance(s, y, up)
    if not math.isfinite(steps_y) or steps_y >= k:
        raise ValueError("t does not carry the short cylinder onto the y-segment")
    alpha = (-int(steps_y)) % k

    up = y
    for _ in range(b):
        up = t(up)
    if up == z or math.isfinite(s_distance(s, z, up)):
        pos = 0 if up == z else int(s_distance(s, z, up))
    else:
        steps_x = 0 if up == x else s_distance(s, x, up)
        if not math.isfinite(steps_x) or steps_x >= ell - k:
            raise ValueError("t does not carry the tall cylinder onto the gluing row")
        pos = k + int(steps_x)
    beta = (-pos) % ell
    return TwoCylParams(a, b, k, ell, alpha, beta)


def one_cylinder_primitive(params: OneCylParams) -> bool:
    """Whether the one-cylinder surface is not a proper cover: k = 1 and gcd(a,b,c) = 1."""
    return params.k == 1 and gcd(params.a, params.b, params.c) == 1


def two_cylinder_primitive(params: TwoCylParams) -> bool:
    """Whether the two-cylinder surface is not a proper cover.

    Requires coprime heights and gcd(k, ell, a*beta - b*alpha) = 1; the
    second condition says the twist vectors, the width vectors and the
    heights together span the full integer lattice.
    """
    if gcd(params.a, params.b) != 1:
        return False
    mixed = params.a * params.beta - params.b * params.alpha
    return gcd(params.k, params.ell, abs(mixed)) == 1


def twist_count(a: int, b: int, k: int, ell: int) -> int:
    """The number of twists (alpha, beta) making the (a, b, k, ell) surface primitive.

    For coprime heights this is k*ell*phi(d)/d with d = gcd(k, ell),
    independent of a and b.
    """
    if min(a, b, k, ell) < 1:
        raise ValueError("all parameters must be >= 1")
    if gcd(a, b) != 1:
        raise ValueError(f"heights must be coprime, got gcd({a}, {b}) != 1")
    d = gcd(k, ell)
    return k * ell * euler_phi(d) // d


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def lattice_generates_z2(vectors) -> bool:
    """Whether the integer span of the given 2-vectors is all of Z^2.

    Hermite reduction: fold each vector into a row-echelon pair
    [[a, b], [0, c]]; the span is Z^2 exactly when |a*c| = 1.  Fewer than
    two independent vectors never suffice.
    """
    a = b = c = 0
    for vx, vy in vectors:
        x, y = int(vx), int(vy)
        if x == 0:
            c = gcd(c, y)
            continue
        if a == 0:
            a, b = abs(x), y if x > 0 else -y
            continue
        g, u, v = _xgcd(a, x)
        new_b = u * b + v * y
        leftover = (x // g) * b - (a // g) * y
        a, b = g, new_b
        c = gcd(c, leftover)
    return a == 1 and c == 1
