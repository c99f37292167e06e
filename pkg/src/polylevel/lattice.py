"""Lattice points of dilates, Ehrhart data, normality and reflexivity tests.

All bodies here are HPolytope instances: x >= 0 plus 0/1-normal upper
facets with integer bounds.  The N-fold dilate is therefore again given by
the same normals with bounds scaled by N, and a lattice point is interior
to the dilate exactly when every listed inequality is strict (for a
full-dimensional polytope a valid inequality can be tight only on a proper
face, and redundant inequalities are tight somewhere too, so they never
exclude a true interior point).

Counting uses a coordinate-by-coordinate dynamic program whose state is
the vector of partial sums of the aggregate facets (|A| >= 2); singleton
facets fold into per-coordinate caps.  Enumeration is plain recursive
descent with partial-sum pruning, adequate at desk scale; both paths use
exact Python integers throughout.

The Ehrhart counts i(P, N) for N = 0..n determine the delta vector

    delta_k = sum_{j=0..k} (-1)^j binom(n+1, j) i(P, k-j),

the coefficient vector of (1 - lambda)^{n+1} times the Ehrhart series.
`delta_vector` cross-checks delta_n against the interior count at N = 1
(an Ehrhart reciprocity consequence) instead of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BudgetExceededError
from .polymatroid import HPolytope

ExponentVector = tuple[int, ...]

DEFAULT_NODE_BUDGET = 10**8


def membership(P: HPolytope, x, N: int = 1, region: str = "full") -> bool:
    """Is x a lattice point of N*P (or of its interior)?"""
    x = tuple(x)
    if len(x) != P.n:
        raise ValueError(f"point has length {len(x)}, polytope dimension is {P.n}")
    _check_region(region)
    lo = 0 if region == "full" else 1
    if any(v < lo for v in x):
        return False
    slack = 0 if region == "full" else 1
    for A, t in P.upper_facets:
        if sum(x[i - 1] for i in A) > N * t - slack:
            return False
    return True


def _check_region(region: str) -> None:
    if region not in ("full", "interior"):
        raise ValueError(f"region must be 'full' or 'interior', got {region!r}")


def _facet_tables(P: HPolytope, N: int, region: str):
    """Per-coordinate caps from singleton facets and aggregate facet data.

    Returns (lo, caps, aggs) where caps[i] is the tightest scaled singleton
    bound on coordinate i+1 (or None) and aggs is a list of
    (members, limit, after) with after[i] = number of members > i+1.
    """
    lo = 0 if region == "full" else 1
    slack = 0 if region == "full" else 1
    caps: list[int | None] = [None] * P.n
    aggs = []
    for A, t in P.upper_facets:
        limit = N * t - slack
        if len(A) == 1:
            i = A[0] - 1
            if caps[i] is None or limit < caps[i]:
                caps[i] = limit
        else:
            after = [0] * (P.n + 1)
            cnt = 0
            for i in range(P.n, 0, -1):
                after[i - 1] = cnt
                if i in A:
                    cnt += 1
            aggs.append((A, limit, after))
    return lo, caps, aggs


def iter_lattice_points(P: HPolytope, N: int, region: str = "full",
                        within=None, budget: int = DEFAULT_NODE_BUDGET):
    """Yield lattice points of N*P (or its interior) in lex order.

    `within` optionally caps each coordinate (used by split searches).
    Raises BudgetExceededError after more than `budget` visited nodes.
    """
    _check_region(region)
    if N < 1:
        raise ValueError("dilation level must be >= 1")
    lo, caps, aggs = _facet_tables(P, N, region)
    if within is not None:
        within = tuple(within)
        if len(within) != P.n:
            raise ValueError("within-box has wrong length")
    n = P.n
    point = [0] * n
    used = [0] * len(aggs)
    agg_at = [[] for _ in range(n)]
    for k, (A, _, _) in enumerate(aggs):
        for i in A:
            agg_at[i - 1].append(k)
    nodes = 0

    def rec(i: int):
        nonlocal nodes
        if i == n:
            yield tuple(point)
            return
        hi = caps[i] if caps[i] is not None else None
        if within is not None:
            w = within[i]
            hi = w if hi is None else min(hi, w)
        for k in agg_at[i]:
            A, limit, after = aggs[k]
            room = limit - used[k] - lo * after[i]
            hi = room if hi is None else min(hi, room)
        if hi is None:  # unreachable: HPolytope validation guarantees coverage
            raise RuntimeError(f"coordinate {i + 1} has no finite bound")
        for v in range(lo, hi + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"enumeration exceeded {budget} nodes")
            point[i] = v
            for k in agg_at[i]:
                used[k] += v
            yield from rec(i + 1)
            for k in agg_at[i]:
                used[k] -= v
    yield from rec(0)


def lattice_points(P: HPolytope, N: int, region: str = "full",
                   within=None, budget: int = DEFAULT_NODE_BUDGET) -> list[ExponentVector]:
    return list(iter_lattice_points(P, N, region, within=within, budget=budget))


def count_lattice_points(P: HPolytope, N: int, region: str = "full",
                         budget: int = DEFAULT_NODE_BUDGET) -> int:
    """|N*P ∩ Z^n| (or the interior count); N = 0 counts 1 resp. 0."""
    _check_region(region)
    if N < 0:
        raise ValueError("dilation level must be >= 0")
    if N == 0:
        return 1 if region == "full" else 0
    lo, caps, aggs = _facet_tables(P, N, region)
    n = P.n
    agg_at = [[] for _ in range(n)]
    for k, (A, _, _) in enumerate(aggs):
        for i in A:
            agg_at[i - 1].append(k)
    last_member = [max(A) for A, _, _ in aggs]
    memo: dict = {}
    nodes = 0

    def rec(i: int, used: tuple[int, ...]) -> int:
        nonlocal nodes
        if i == n:
            return 1
        key = (i, used)
        got = memo.get(key)
        if got is not None:
            return got
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"counting exceeded {budget} states")
        hi = caps[i]
        for k in agg_at[i]:
            A, limit, after = aggs[k]
            room = limit - used[k] - lo * after[i]
            hi = room if hi is None else min(hi, room)
        total = 0
        for v in range(lo, hi + 1):
            nxt = list(used)
            for k in agg_at[i]:
                nxt[k] += v
            # drop finished aggregates from the key for better memo reuse
            for k in range(len(aggs)):
                if last_member[k] <= i + 1:
                    nxt[k] = 0
            total += rec(i + 1, tuple(nxt))
        memo[key] = total
        return total

    return rec(0, (0,) * len(aggs))


@dataclass(frozen=True)
class DeltaVector:
    """Ehrhart counts i(P, N) for N = 0..n and the derived coefficients."""

    n: int
    counts: tuple[int, ...]
    delta: tuple[int, ...]

    @property
    def normalized_volume(self) -> int:
        return sum(self.delta)


def delta_vector(P: HPolytope, budget: int = DEFAULT_NODE_BUDGET) -> DeltaVector:
    n = P.n
    counts = tuple(count_lattice_points(P, N, "full", budget=budget) for N in range(n + 1))
    delta = tuple(
        sum((-1) ** j * comb(n + 1, j) * counts[k - j] for j in range(k + 1))
        for k in range(n + 1)
    )
    if delta[0] != 1 or any(d < 0 for d in delta):
        raise RuntimeError(f"inconsistent delta vector {delta} (internal error)")
    interior1 = count_lattice_points(P, 1, "interior", budget=budget)
    if delta[n] != interior1:
        raise RuntimeError(
            f"delta_n = {delta[n]} disagrees with interior count {interior1} (internal error)"
        )
    return DeltaVector(n=n, counts=counts, delta=delta)


def is_unimodal(d) -> bool:
    """Weakly rises up to a middle index, then weakly falls.

    The peak may sit at floor(n/2) or ceil(n/2); for odd n both middle
    positions occur among delta vectors of level polytopes, so either one
    qualifies (they coincide for even n).
    """
    seq = tuple(d.delta) if isinstance(d, DeltaVector) else tuple(d)
    n = len(seq) - 1

    def peaked_at(mid: int) -> bool:
        return all(seq[i] <= seq[i + 1] for i in range(mid)) and all(
            seq[i] >= seq[i + 1] for i in range(mid, n)
        )

    return peaked_at(n // 2) or peaked_at((n + 1) // 2)


def _greedy_summand(P: HPolytope, a: ExponentVector, N: int) -> ExponentVector | None:
    """A lattice point p of P with p <= a and a - p in (N-1)*P, or None.

    Greedy: clamp a into the box, then shrink coordinates of violated
    aggregate facets no further than the remainder constraints allow.
    """
    n = P.n
    flo = [0] * n
    p = list(a)
    for A, t in P.upper_facets:
        if len(A) == 1:
            i = A[0] - 1
            if p[i] > t:
                p[i] = t
            f = a[i] - (N - 1) * t
            if f > flo[i]:
                flo[i] = f
    for A, t in P.upper_facets:
        excess = sum(p[i - 1] for i in A) - t
        if excess <= 0:
            continue
        for i in sorted(A, key=lambda i: -p[i - 1]):
            give = min(excess, p[i - 1] - flo[i - 1])
            if give > 0:
                p[i - 1] -= give
                excess -= give
            if excess == 0:
                break
        if excess > 0:
            return None
    q = tuple(x - y for x, y in zip(a, p))
    if membership(P, p, 1, "full") and (
        N == 1 and all(v == 0 for v in q) or N > 1 and membership(P, q, N - 1, "full")
    ):
        return tuple(p)
    return None


def normality_check(P: HPolytope, max_n: int, budget: int = DEFAULT_NODE_BUDGET):
    """Does every lattice point of N*P split into N points of P, N <= max_n?

    Checks level by level: once level N-1 is verified, a point of N*P
    decomposes iff it is p + q with p a point of P and q a point of
    (N-1)*P, so a membership test replaces the explicit sumset.  Returns
    (True, None) or (False, (N, witness_point)).
    """
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    S1 = lattice_points(P, 1, "full", budget=budget)
    # descending coordinate sums: large summands leave small remainders
    S1_desc = sorted(S1, key=lambda p: (-sum(p), p))
    for N in range(2, max_n + 1):
        for a in iter_lattice_points(P, N, "full", budget=budget):
            if _greedy_summand(P, a, N) is not None:
                continue
            ok = False
            for p in S1_desc:
                if all(pi <= ai for pi, ai in zip(p, a)) and membership(
                    P, tuple(ai - pi for ai, pi in zip(a, p)), N - 1, "full"
                ):
                    ok = True
                    break
            if not ok:
                return False, (N, a)
    return True, None


def reflexive_up_to_translation(P: HPolytope, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Unique interior lattice point at lattice distance 1 from every facet.

    All normals here are 0/1 vectors, hence primitive, so the lattice
    distance of the interior point from a facet is the plain slack.
    """
    interior = lattice_points(P, 1, "interior", budget=budget)
    if len(interior) != 1:
        raise ValueError(
            f"not pseudo-Gorenstein*: interior count is {len(interior)}, need exactly 1"
        )
    p = interior[0]
    if any(v != 1 for v in p):
        return False
    return all(t - sum(p[i - 1] for i in A) == 1 for A, t in P.upper_facets)
