"""Permutation groups given by generators: orbits, blocks, primitivity, order."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from permcensus.perm import Permutation, commutator, identity, signature

ALT = "alt"
SYM = "sym"
NEITHER = "neither"


@dataclass(frozen=True)
class GeneratedGroup:
    """A subgroup of S_n described by a tuple of generators."""

    degree: int
    generators: tuple[Permutation, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError(
                    f"generator degree {g.degree} does not match group degree {self.degree}"
                )


def generated(*gens: Permutation) -> GeneratedGroup:
    """GeneratedGroup of the given (at least one) permutations."""
    if not gens:
        raise ValueError("need at least one generator")
    return GeneratedGroup(gens[0].degree, tuple(gens))


def orbit(group: GeneratedGroup, x: int) -> frozenset[int]:
    """The orbit of the point x under the group."""
    if not 1 <= x <= group.degree:
        raise ValueError(f"point {x} outside 1..{group.degree}")
    images = [g.image for g in group.generators]
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for p in frontier:
            for img in images:
                q = img[p - 1]
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def is_transitive(group: GeneratedGroup) -> bool:
    """Whether the group has a single orbit on 1..n."""
    return len(orbit(group, 1)) == group.degree


def minimal_block(group: GeneratedGroup, x: int, y: int) -> frozenset[int]:
    """The smallest block of imprimitivity containing {x, y} (group transitive).

    Union-find closure: repeatedly merge the classes of g(u), g(v) for
    every generator g whenever the classes of u and v merge.  The class
    of x in the resulting congruence is the minimal block.
    """
    n = group.degree
    if x == y or not (1 <= x <= n and 1 <= y <= n):
        raise ValueError("x and y must be distinct points of 1..n")
    if not is_transitive(group):
        raise ValueError("minimal_block requires a transitive group")

    parent = list(range(n + 1))

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    images = [g.image for g in group.generators]
    queue = [(x, y)]
    while queue:
        u, v = queue.pop()
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        parent[rv] = ru
        for img in images:
            queue.append((img[ru - 1], img[rv - 1]))

    root = find(x)
    return frozenset(p for p in range(1, n + 1) if find(p) == root)


def is_primitive(group: GeneratedGroup) -> bool:
    """Transitive with no nontrivial blocks (degree >= 2).

    It suffices to check the blocks generated by {1, y}: a nontrivial
    block through any pair maps to one through the point 1 by transitivity.
    """
    n = group.degree
    if n < 2:
        raise ValueError(f"primitivity needs degree >= 2, got {n}")
    if not is_transitive(group):
        return False
    full = frozenset(range(1, n + 1))
    return all(minimal_block(group, 1, y) == full for y in range(2, n + 1))


def _p_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[x - 1] for x in q)


def _p_inv(p: tuple[int, ...]) -> tuple[int, ...]:
    img = [0] * len(p)
    for x, y in enumerate(p, start=1):
        img[y - 1] = x
    return tuple(img)


def group_order(group: GeneratedGroup, max_degree: int = 10) -> int:
    """Exact order of the group via a stabilizer chain with base 1, 2, ..., n.

    Deterministic Schreier-Sims: each level i holds the generators fixing
    the points 1..i and a transversal for the orbit of i+1; new Schreier
    generators are sifted down the chain until everything stabilizes.
    The order is the product of the orbit sizes.  Degrees above
    max_degree are refused (the chain is meant for desk-scale checks).
    """
    n = group.degree
    if n > max_degree:
        raise ValueError(f"degree {n} exceeds the configured cap {max_degree}")
    ident = tuple(range(1, n + 1))
    level_gens: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    transversals: list[dict[int, tuple[int, ...]]] = [{i + 1: ident} for i in range(n)]

    def rebuild_orbit(i: int) -> None:
        base = i + 1
        trans = {base: ident}
        frontier = [base]
        while frontier:
            nxt = []
            for pt in frontier:
                rep = trans[pt]
                for g in level_gens[i]:
                    img = g[pt - 1]
                    if img not in trans:
                        trans[img] = _p_mul(g, rep)
                        nxt.append(img)
            frontier = nxt
        transversals[i] = trans

    def sift_from(p: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
        """Strip p through levels >= start; (residue, level it got stuck at)."""
        residue = p
        i = start
        while i < n:
            x = residue[i]
            if x == i + 1:
                i += 1
                continue
            trans = transversals[i]
            if x not in trans:
                return residue, i
            residue = _p_mul(_p_inv(trans[x]), residue)
            i += 1
        return residue, n

    def complete(i: int) -> None:
        """Re-close level i: every Schreier generator must sift to the identity.

        A residue stuck at a deeper level fixes the base points 1..stuck,
        so it joins the generator lists of every level in between; those
        levels are then re-closed deepest-first before the sweep goes on.
        """
        rebuild_orbit(i)
        trans = transversals[i]
        for pt in sorted(trans):
            rep = trans[pt]
            for g in level_gens[i]:
                target = trans[g[pt - 1]]
                schreier = _p_mul(_p_inv(target), _p_mul(g, rep))
                if schreier == ident:
                    continue
                residue, stuck = sift_from(schreier, i + 1)
                if stuck == n:
                    continue
                for j in range(i + 1, stuck + 1):
                    level_gens[j].append(residue)
                for j in range(stuck, i, -1):
                    complete(j)

    for g in group.generators:
        if g.image != ident:
            level_gens[0].append(g.image)
    complete(0)

    order = 1
    for trans in transversals:
        order *= len(trans)
    return order


def element_closure(group: GeneratedGroup) -> frozenset[Permutation]:
    """Every element of the group by breadth-first closure (small degrees only)."""
    seen = {identity(group.degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in group.generators:
                q = Permutation(_p_mul(g.image, p.image))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def _is_three_cycle(p: Permutation) -> bool:
    return sum(1 for x, y in enumerate(p.image, start=1) if x != y) == 3


def jordan_route(s: Permutation, t: Permutation) -> str | None:
    """Classify <s, t> via a 3-cycle certificate plus primitivity.

    A primitive group containing a 3-cycle contains the alternating
    group; it is the full symmetric group exactly when some generator is
    odd.  Returns None when the route has no certificate ([s, t] is not
    a 3-cycle) and the group is transitive and primitive, in which case
    the order route must decide.
    """
    n = _common_degree(s, t)
    group = GeneratedGroup(n, (s, t))
    if not is_transitive(group):
        return NEITHER
    if not is_primitive(group):
        return NEITHER
    if not _is_three_cycle(commutator(s, t)):
        return None
    return ALT if signature(s) == 1 and signature(t) == 1 else SYM


def order_route(s: Permutation, t: Permutation, max_degree: int = 10) -> str:
    """Classify <s, t> purely by its order: n! -> sym, n!/2 -> alt."""
    n = _common_degree(s, t)
    order = group_order(GeneratedGroup(n, (s, t)), max_degree=max_degree)
    full = factorial(n)
    if order == full:
        return SYM
    if 2 * order == full:
        return ALT
    return NEITHER


def generates_alt_or_sym(s: Permutation, t: Permutation) -> str:
    """Whether <s, t> is the alternating group, the symmetric group, or neither.

    Degree must be at least 3.  The 3-cycle certificate route answers
    almost every input arising here (the pairs of interest have 3-cycle
    commutators); the stabilizer-chain order decides the rest.
    """
    answer = jordan_route(s, t)
    if answer is not None:
        return answer
    return order_route(s, t)


def _common_degree(s: Permutation, t: Permutation) -> int:
    if s.degree != t.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {t.degree}")
    if s.degree < 3:
        raise ValueError(f"classification needs degree >= 3, got {s.degree}")
    return s.degree
