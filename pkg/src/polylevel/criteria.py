"""Closed-form levelness and pseudo-Gorenstein* criteria, plus searches.

Each criterion here is a purely arithmetic test; the suite cross-validates
every one of them against the direct polytope computations.

Complete bipartite graphs.  Index the heavy side as [m] (strictly larger
bound sum) and write R for the bound sum of the small side; every heavy
bound must satisfy c_i <= R.  With A = {i in [m] : c_i = R} and
B = [m] \\ A, the hull polytope is the box over B and the small side,
unbounded-above coordinates over A, and one aggregate inequality
x_1 + ... + x_m <= R.  The interior is nonempty iff all bounds off A are
at least 2 and R >= m + 1, and levelness fails exactly when some subset
obstruction fires:

  (1)  some nonempty X within B has   R < sum_X c_i < R - m + 2|X| - 1,
  (2)  some nonempty X within [m] has
         sum_[m] c_i - sum_X c_i < R <= 2|X| + sum_[m] c_i - sum_X c_i - m.

Polytopes of Veronese type (box c truncated by a full-sum bound a) carry
the analogous obstruction test over subsets of [n]; for uniform bounds it
collapses to membership of `a` in an explicit union of integer intervals
(empty intervals, lower end above upper end, are treated as empty).

Trees admit a bound vector with a pseudo-Gorenstein* hull exactly when no
two leaves sit at distance 2, with the all-twos vector as witness; for
complete bipartite graphs the side sizes must satisfy n <= m <= 2n - 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounded import BasisSet, enumerate_bases
from .graphs import Graph, leaf_distance_two_exists
from .lattice import lattice_points, membership
from .polymatroid import RankOracle, VeroneseSpec, facets

Witness = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class BipartiteSpec:
    """Bounds for a complete bipartite graph, heavy side indexed as [m]."""

    m: int
    n: int
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        if self.m < 1 or self.n < 1 or len(self.c) != self.m + self.n:
            raise ValueError("need m, n >= 1 and m + n bounds")
        if any(ci < 1 for ci in self.c):
            raise ValueError("bounds must be positive")
        if self.heavy_sum <= self.small_sum:
            raise ValueError(
                f"heavy side sum {self.heavy_sum} must strictly exceed {self.small_sum}"
            )
        bad = [i for i in range(1, self.m + 1) if self.c[i - 1] > self.small_sum]
        if bad:
            raise ValueError(f"heavy bounds above the small side sum at {bad}")

    @property
    def heavy_sum(self) -> int:
        return sum(self.c[: self.m])

    @property
    def small_sum(self) -> int:
        return sum(self.c[self.m:])

    @property
    def saturated(self) -> tuple[int, ...]:
        """A: heavy indices whose bound equals the small side sum."""
        return tuple(i for i in range(1, self.m + 1) if self.c[i - 1] == self.small_sum)

    @property
    def unsaturated(self) -> tuple[int, ...]:
        """B: the remaining heavy indices."""
        return tuple(i for i in range(1, self.m + 1) if self.c[i - 1] < self.small_sum)


def bipartite_spec(m: int, n: int, c) -> BipartiteSpec:
    """Normalize a K_{m,n} bound vector so the heavy side comes first.

    Raises ValueError when the side sums are equal (the hull is then the
    plain box and the subset criterion does not apply).
    """
    c = tuple(c)
    if len(c) != m + n:
        raise ValueError(f"expected {m + n} bounds, got {len(c)}")
    left, right = sum(c[:m]), sum(c[m:])
    if left > right:
        return BipartiteSpec(m, n, c)
    if right > left:
        return BipartiteSpec(n, m, c[m:] + c[:m])
    raise ValueError("side sums are equal: the hull is the box, no criterion needed")


def bipartite_interior_nonempty(spec: BipartiteSpec) -> bool:
    """Interior lattice points exist iff bounds off A are >= 2 and R >= m+1."""
    off_a = spec.unsaturated + tuple(range(spec.m + 1, spec.m + spec.n + 1))
    return all(spec.c[i - 1] >= 2 for i in off_a) and spec.small_sum >= spec.m + 1


def bipartite_level_criterion(spec: BipartiteSpec) -> tuple[bool, Witness | None]:
    """Subset obstruction test; returns the first violating X in (size, lex) order.

    Requires the interior hypotheses (R >= m+1, bounds off A at least 2).
    """
    if not bipartite_interior_nonempty(spec):
        raise ValueError("criterion hypotheses violated: interior conditions fail")
    R = spec.small_sum
    L = spec.heavy_sum
    m = spec.m
    bset = set(spec.unsaturated)
    for size in range(1, m + 1):
        for X in itertools.combinations(range(1, m + 1), size):
            s = sum(spec.c[i - 1] for i in X)
            if set(X) <= bset and R < s < R - m + 2 * size - 1:
                return False, (1, X)
            if L - s < R <= 2 * size + L - s - m:
                return False, (2, X)
    return True, None


def veronese_level_criterion(spec: VeroneseSpec) -> tuple[bool, Witness | None]:
    """Subset obstruction test for a polytope of Veronese type."""
    a, n = spec.a, spec.n
    total = sum(spec.c)
    for size in range(1, n + 1):
        for X in itertools.combinations(range(1, n + 1), size):
            s = sum(spec.c[i - 1] for i in X)
            if a < s < a - n + 2 * size - 1:
                return False, (1, X)
            if total - s < a <= 2 * size + total - s - n:
                return False, (2, X)
    return True, None


def veronese_uniform_formula(n: int, c: int, a: int) -> bool:
    """Interval-union form of the criterion for uniform bounds c."""
    if not (a > c >= 2 and a >= n + 1 and a < n * c):
        raise ValueError(f"need a > c >= 2, a >= n+1, a < n*c; got n={n}, c={c}, a={a}")
    for k in range(1, n + 1):
        if k * c + n - 2 * k + 2 <= a <= k * c - 1:
            return False
        if (n - k) * c + 1 <= a <= 2 * k + (n - k) * c - n:
            return False
    return True


def tree_labeling_pseudo_gorenstein(T: Graph) -> bool:
    """Does some bound vector give the tree a pseudo-Gorenstein* hull?

    Holds exactly when no two leaves are at distance 2; the all-twos
    bound vector is then a witness.
    """
    return not leaf_distance_two_exists(T)


def bipartite_labeling_classification(m: int, n: int) -> bool:
    """Does some bound vector give K_{m,n} a pseudo-Gorenstein* hull?"""
    if m < 1 or n < 1:
        raise ValueError("side sizes must be positive")
    if m < n:
        m, n = n, m
    return m <= 2 * n - 1


def dilation_containment(G: Graph, c, N: int) -> tuple[bool, bool]:
    """Compare the N-fold dilate of the hull with the hull for bounds N*c.

    Returns (holds, strict): `holds` is containment of the dilate in the
    larger hull (checked on the scaled basis vectors, which generate it)
    and must always be true; `strict` flags a lattice point of the larger
    hull outside the dilate.
    """
    if N < 1:
        raise ValueError("dilation level must be >= 1")
    c = tuple(c)
    P1 = facets(enumerate_bases(G, c))
    P2 = facets(enumerate_bases(G, tuple(N * ci for ci in c)))
    B1 = enumerate_bases(G, c)
    holds = all(
        membership(P2, tuple(N * x for x in b), 1, "full") for b in B1.bases
    )
    strict = any(
        not membership(P1, pt, N, "full") for pt in lattice_points(P2, 1, "full")
    )
    return holds, strict


def _pseudo_gorenstein_from_bases(B: BasisSet) -> bool:
    """Interior count == 1, straight from subset ranks.

    A lattice point is interior to the hull iff it is >= 1 and satisfies
    sum_X x < rank(X) for every nonempty subset X: each such inequality is
    valid and tight somewhere, so interior points satisfy all of them
    strictly, facet or not.  Candidate boxes are tiny for search bounds of
    desk size, so this skips the facet scan entirely.
    """
    R = RankOracle.from_basis_set(B)
    n = B.n
    his = [R.rank_mask(1 << i) - 1 for i in range(n)]
    if any(h < 1 for h in his):
        return False
    size = 1 << n
    found = 0
    sums = [0] * size
    for cand in itertools.product(*(range(1, h + 1) for h in his)):
        ok = True
        for mask in range(1, size):
            low = mask & -mask
            s = sums[mask ^ low] + cand[low.bit_length() - 1]
            sums[mask] = s
            if s >= R.rank_mask(mask):
                ok = False
                break
        if ok:
            found += 1
            if found > 1:
                return False
    return found == 1


def search_labeling(G: Graph, c_max: int, candidate_cap: int = 10**7):
    """First bound vector in [1..c_max]^n (lex order) with a
    pseudo-Gorenstein* hull, or None.

    Absence only means no witness with entries up to c_max exists.
    """
    if c_max < 1:
        raise ValueError("c_max must be >= 1")
    for c in itertools.product(range(1, c_max + 1), repeat=G.n):
        B = enumerate_bases(G, c, candidate_cap=candidate_cap)
        if _pseudo_gorenstein_from_bases(B):
            return c
    return None
