"""Ground-set rank function and the irredundant facet system of the hull.

For a basis set B on [n] the rank of a subset X is the largest coordinate
sum over X attained by a basis.  Rank is monotone and submodular, and the
convex hull of the divisor set is cut out by x_i >= 0 together with

    sum_{i in A} x_i <= rank(A)

where A runs over the subsets that are *closed* (every strict superset has
strictly larger rank) and *inseparable* (no bipartition splits the rank
additively).  That classical description of integral polymatroid facets is
what `facets` computes, by direct scan over all 2^n subsets.

`HPolytope` is the resulting inequality system: implicit lower bounds
x_i >= 0 plus upper facets with 0/1 normal vectors and integer bounds.
Polytopes of Veronese type (a box truncated by one full simplex
inequality) are built directly from their parameter sequence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounded import BasisSet, enumerate_bases
from .errors import BudgetExceededError
from .graphs import star

FACET_SCAN_MAX_DIM = 16

Subset = tuple[int, ...]


class RankOracle:
    """Bitmask-indexed table of subset ranks of a basis set."""

    def __init__(self, n: int, bases):
        self.n = n
        size = 1 << n
        table = [0] * size
        for a in bases:
            if len(a) != n:
                raise ValueError("basis length does not match n")
            sums = [0] * size
            for mask in range(1, size):
                low = mask & -mask
                s = sums[mask ^ low] + a[low.bit_length() - 1]
                sums[mask] = s
                if s > table[mask]:
                    table[mask] = s
        self._table = table

    @classmethod
    def from_basis_set(cls, B: BasisSet) -> "RankOracle":
        return cls(B.n, B.bases)

    def rank_mask(self, mask: int) -> int:
        return self._table[mask]

    def rank(self, X) -> int:
        """Rank of a subset given as an iterable of 1-based indices."""
        mask = 0
        for i in X:
            if not 1 <= i <= self.n:
                raise ValueError(f"index {i} outside 1..{self.n}")
            mask |= 1 << (i - 1)
        return self._table[mask]


def rank(B: BasisSet, X) -> int:
    return RankOracle.from_basis_set(B).rank(X)


def is_closed_mask(R: RankOracle, mask: int) -> bool:
    """Closed: adding any single element strictly raises the rank.

    By monotonicity this one-element test settles all supersets: a rank
    plateau on any superset forces a plateau along a chain of single
    additions.
    """
    if mask == 0:
        raise ValueError("subset must be nonempty")
    table = R._table
    base = table[mask]
    full = (1 << R.n) - 1
    rest = full & ~mask
    while rest:
        bit = rest & -rest
        if table[mask | bit] <= base:
            return False
        rest ^= bit
    return True


def is_inseparable_mask(R: RankOracle, mask: int) -> bool:
    """Inseparable: no bipartition A' | A'' has rank(A') + rank(A'') == rank(A)."""
    if mask == 0:
        raise ValueError("subset must be nonempty")
    if mask & (mask - 1) == 0:  # singleton
        return True
    table = R._table
    total = table[mask]
    low = mask & -mask
    # enumerate submasks containing the lowest bit; the complement is nonempty
    sub = (mask - 1) & mask
    while sub:
        if sub & low and sub != mask:
            if table[sub] + table[mask ^ sub] == total:
                return False
        sub = (sub - 1) & mask
    # the submask loop misses `mask` itself only; nothing else to check
    return True


def _mask_of(subset: Subset) -> int:
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def is_closed(R: RankOracle, A) -> bool:
    return is_closed_mask(R, _mask_of(tuple(A)))


def is_inseparable(R: RankOracle, A) -> bool:
    return is_inseparable_mask(R, _mask_of(tuple(A)))


@dataclass(frozen=True)
class HPolytope:
    """Inequality system x >= 0, sum_{i in A} x_i <= t per upper facet (A, t).

    Every coordinate must occur in some upper facet, which makes the body
    bounded; all bounds are positive integers, so the standard simplex
    sits inside and the polytope is full-dimensional.
    """

    n: int
    upper_facets: tuple[tuple[Subset, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        covered = set()
        seen = set()
        for A, t in self.upper_facets:
            if not A or any(not 1 <= i <= self.n for i in A):
                raise ValueError(f"bad facet subset {A}")
            if tuple(A) != tuple(sorted(set(A))):
                raise ValueError(f"facet subset {A} must be sorted and duplicate-free")
            if A in seen:
                raise ValueError(f"duplicate facet subset {A}")
            seen.add(A)
            if t < 1:
                raise ValueError(f"facet bound {t} must be positive")
            covered.update(A)
        if covered != set(range(1, self.n + 1)):
            missing = sorted(set(range(1, self.n + 1)) - covered)
            raise ValueError(f"unbounded coordinates (no upper facet): {missing}")


def facets(B: BasisSet) -> HPolytope:
    """Irredundant facet system of the hull of the divisor set of B.

    Scans subsets in (size, lex) order; output keeps that order, so
    reports are reproducible.
    """
    if B.n > FACET_SCAN_MAX_DIM:
        raise BudgetExceededError(
            f"dimension {B.n} exceeds the facet scan cap {FACET_SCAN_MAX_DIM}"
        )
    R = RankOracle.from_basis_set(B)
    out: list[tuple[Subset, int]] = []
    for size in range(1, B.n + 1):
        for combo in itertools.combinations(range(1, B.n + 1), size):
            mask = _mask_of(combo)
            if is_closed_mask(R, mask) and is_inseparable_mask(R, mask):
                out.append((combo, R.rank_mask(mask)))
    return HPolytope(n=B.n, upper_facets=tuple(out))


@dataclass(frozen=True)
class VeroneseSpec:
    """Parameters (a; c_1 >= ... >= c_n >= 2) with a > c_1, a >= n+1, a < sum(c)."""

    n: int
    a: int
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        if self.n < 1 or len(self.c) != self.n:
            raise ValueError("c must have length n >= 1")
        if any(self.c[i] < self.c[i + 1] for i in range(self.n - 1)):
            raise ValueError("c must be weakly decreasing")
        if self.c[-1] < 2:
            raise ValueError("all c_i must be >= 2")
        if not (self.a > self.c[0] and self.a >= self.n + 1 and self.a < sum(self.c)):
            raise ValueError(
                f"need a > c_1, a >= n+1 and a < sum(c); got a={self.a}, c={self.c}"
            )


def veronese_polytope(spec: VeroneseSpec) -> HPolytope:
    """Box 0 <= x_i <= c_i truncated by x_1 + ... + x_n <= a."""
    ups = [((i,), spec.c[i - 1]) for i in range(1, spec.n + 1)]
    ups.append((tuple(range(1, spec.n + 1)), spec.a))
    return HPolytope(n=spec.n, upper_facets=tuple(ups))


def star_prism(spec: VeroneseSpec) -> HPolytope:
    """Hull polytope of the star K_{1,n} with bounds (a, c_1, ..., c_n).

    Built through the generic basis/facet pipeline; the result equals the
    prism 0 <= x_1 <= a over the Veronese polytope in coordinates 2..n+1,
    which the test suite asserts.
    """
    G = star(spec.n)
    bounds = (spec.a,) + spec.c
    return facets(enumerate_bases(G, bounds))
