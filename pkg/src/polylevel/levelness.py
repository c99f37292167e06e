"""Interior splitting: pseudo-Gorenstein*, level*, reduced and int* degrees.

Definitions, for a full-dimensional lattice polytope P given by x >= 0 and
0/1-normal upper facets:

* P is pseudo-Gorenstein* when its interior holds exactly one lattice
  point (P is normal by construction for every polytope this package
  produces).

* P is level* when the interior is nonempty and every interior lattice
  point a of every dilate N*P splits as a = a0 + a' with a0 an interior
  lattice point of P and a' a lattice point of (N-1)*P.

* The reduced degree of an interior lattice point a of N*P is the least
  r >= 1 such that a = a0 + a' with a0 interior to r*P and a' in (N-r)*P;
  r = N always works.  The int* degree of P is the largest reduced degree
  over all dilates, and P is level* exactly when that degree is 1.

Finite scan bound.  The reduced degree never exceeds n - 1, and a point
of reduced degree r >= 2 at level N > r yields one of reduced degree
exactly r at level r: split off an interior summand a0 of r*P; were a0 =
b0 + b' with b0 interior to s*P, s < r, then a itself would split at s.
So the maximum is realized at level N = r <= n - 1, and scanning dilation
levels 2..max(2, n-1) decides levelness.  The bound is overridable for
exploratory runs and recorded in reports.

Split tests in closed form.  A candidate summand a0 for a at level N and
degree r is constrained per coordinate to the window

    max(1, a_i - (N-r) u_i)  <=  a0_i  <=  min(a_i, r u_i - 1)

(u_i the singleton bound, absent terms dropped) and per aggregate facet
(A, t) to  sum_A a - (N-r) t <= sum_A a0 <= r t - 1.  When the aggregate
facets are pairwise disjoint these constraints decouple, so existence is
a per-aggregate interval intersection; searches over failing points then
run over aggregate coordinates only, with suffix tables of the two
achievable extremes.  Nested (laminar) families use an exact interval
propagation instead; anything else falls back to an explicit depth-first
search per point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .lattice import (
    DEFAULT_NODE_BUDGET,
    count_lattice_points,
    iter_lattice_points,
    lattice_points,
    membership,
)
from .polymatroid import HPolytope

ExponentVector = tuple[int, ...]

DEFAULT_TABLE_CAP = 10**6
_NEG = -(10**15)


def pseudo_gorenstein_star(P: HPolytope, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Exactly one interior lattice point?"""
    return count_lattice_points(P, 1, "interior", budget=budget) == 1


@dataclass(frozen=True)
class _Structure:
    """Facet data split into singleton caps and aggregate facets.

    When the aggregates form a laminar family (pairwise disjoint or
    nested), `forest` holds them in inclusion order: per aggregate its
    child aggregates and the member coordinates not covered by a child.
    """

    n: int
    u: tuple[int | None, ...]          # tightest singleton bound per coordinate
    aggs: tuple[tuple[tuple[int, ...], int], ...]
    disjoint: bool
    laminar: bool
    forest: tuple[tuple[int, ...], ...]  # per aggregate: child aggregate indices
    own: tuple[tuple[int, ...], ...]     # per aggregate: members in no child


def _structure(P: HPolytope) -> _Structure:
    u: list[int | None] = [None] * P.n
    aggs = []
    for A, t in P.upper_facets:
        if len(A) == 1:
            i = A[0] - 1
            if u[i] is None or t < u[i]:
                u[i] = t
        else:
            aggs.append((A, t))
    aggs.sort(key=lambda at: (len(at[0]), at[0]))
    sets = [frozenset(A) for A, _ in aggs]
    disjoint = laminar = True
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            inter = sets[i] & sets[j]
            if inter:
                disjoint = False
                if not (sets[i] <= sets[j] or sets[j] <= sets[i]):
                    laminar = False
    forest: list[tuple[int, ...]] = [()] * len(aggs)
    own: list[tuple[int, ...]] = [tuple(A) for A, _ in aggs]
    if laminar:
        parent = [None] * len(aggs)
        for k in range(len(aggs)):
            best = None
            for m in range(k + 1, len(aggs)):  # strictly larger by sort order
                if sets[k] < sets[m] and (best is None or sets[m] < sets[best]):
                    best = m
            parent[k] = best
        children: list[list[int]] = [[] for _ in aggs]
        for k, p in enumerate(parent):
            if p is not None:
                children[p].append(k)
        forest = [tuple(ch) for ch in children]
        own = []
        for k, (A, _) in enumerate(aggs):
            covered = set()
            for ch in forest[k]:
                covered.update(sets[ch])
            own.append(tuple(sorted(set(A) - covered)))
    return _Structure(n=P.n, u=tuple(u), aggs=tuple(aggs), disjoint=disjoint,
                      laminar=laminar, forest=tuple(forest), own=tuple(own))


def _window(a_i: int, u_i: int | None, N: int, r: int) -> tuple[int, int | None]:
    """Feasible values of the summand coordinate; upper None means only a_i."""
    lo = 1
    hi = a_i
    if u_i is not None:
        lo = max(lo, a_i - (N - r) * u_i)
        hi = min(hi, r * u_i - 1)
    return lo, hi


def _split_feasible_disjoint(st: _Structure, a: ExponentVector, N: int, r: int) -> bool:
    """Split-existence when aggregate facets are pairwise disjoint."""
    wlo = [0] * st.n
    whi = [0] * st.n
    for i in range(st.n):
        lo, hi = _window(a[i], st.u[i], N, r)
        if lo > hi:
            return False
        wlo[i], whi[i] = lo, hi
    for A, t in st.aggs:
        s_a = sum(a[i - 1] for i in A)
        lo = max(s_a - (N - r) * t, sum(wlo[i - 1] for i in A))
        hi = min(r * t - 1, sum(whi[i - 1] for i in A))
        if lo > hi:
            return False
    return True


def _split_feasible_laminar(st: _Structure, a: ExponentVector, N: int, r: int) -> bool:
    """Split-existence for a laminar aggregate family.

    Interval propagation leaf-to-root: the achievable sum range of an
    aggregate is the sum of its children's clipped ranges plus the
    coordinate windows it owns, clipped to its own window; sums of
    contiguous integer ranges over disjoint parts stay contiguous, so the
    propagation is exact.
    """
    wlo = [0] * st.n
    whi = [0] * st.n
    for i in range(st.n):
        lo, hi = _window(a[i], st.u[i], N, r)
        if lo > hi:
            return False
        wlo[i], whi[i] = lo, hi
    k_lo = [0] * len(st.aggs)
    k_hi = [0] * len(st.aggs)
    for k, (A, t) in enumerate(st.aggs):  # sorted by size: children first
        lo = sum(k_lo[ch] for ch in st.forest[k]) + sum(wlo[i - 1] for i in st.own[k])
        hi = sum(k_hi[ch] for ch in st.forest[k]) + sum(whi[i - 1] for i in st.own[k])
        s_a = sum(a[i - 1] for i in A)
        lo = max(lo, s_a - (N - r) * t)
        hi = min(hi, r * t - 1)
        if lo > hi:
            return False
        k_lo[k], k_hi[k] = lo, hi
    return True


def _split_exists_dfs(P: HPolytope, a: ExponentVector, N: int, r: int) -> bool:
    """Split-existence by depth-first search; valid for any facet structure."""
    st = _structure(P)
    n = st.n
    windows = []
    for i in range(n):
        lo, hi = _window(a[i], st.u[i], N, r)
        if lo > hi:
            return False
        windows.append((lo, hi))
    aggs = []
    for A, t in st.aggs:
        s_a = sum(a[i - 1] for i in A)
        need = s_a - (N - r) * t          # lower bound on the summand's A-sum
        cap = r * t - 1                   # upper bound
        suf_lo = [0] * (n + 1)
        suf_hi = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            inA = (i + 1) in A
            suf_lo[i] = suf_lo[i + 1] + (windows[i][0] if inA else 0)
            suf_hi[i] = suf_hi[i + 1] + (windows[i][1] if inA else 0)
        aggs.append((set(A), need, cap, suf_lo, suf_hi))

    def rec(i: int, used: list[int]) -> bool:
        if i == n:
            return all(used[k] >= aggs[k][1] for k in range(len(aggs)))
        lo, hi = windows[i]
        for k, (mem, need, cap, suf_lo, suf_hi) in enumerate(aggs):
            if i + 1 in mem:
                hi = min(hi, cap - used[k] - suf_lo[i + 1])
                lo = max(lo, need - used[k] - suf_hi[i + 1])
        for v in range(lo, hi + 1):
            touched = []
            for k, (mem, *_rest) in enumerate(aggs):
                if i + 1 in mem:
                    used[k] += v
                    touched.append(k)
            if rec(i + 1, used):
                return True
            for k in touched:
                used[k] -= v
        return False

    return rec(0, [0] * len(aggs))


def _split_exists(P: HPolytope, st: _Structure, a: ExponentVector, N: int, r: int) -> bool:
    if st.disjoint:
        return _split_feasible_disjoint(st, a, N, r)
    if st.laminar:
        return _split_feasible_laminar(st, a, N, r)
    return _split_exists_dfs(P, a, N, r)


def reduced_degree(P: HPolytope, a, N: int, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Least r such that a splits off an interior lattice point of r*P."""
    a = tuple(a)
    if not membership(P, a, N, "interior"):
        raise ValueError(f"{a} is not an interior lattice point of the {N}-fold dilate")
    st = _structure(P)
    for r in range(1, N + 1):
        if _split_exists(P, st, a, N, r):
            return r
    raise RuntimeError("unreachable: r = N always splits")  # pragma: no cover


# --- enumeration of points with no degree-1 split -------------------------

def _gain_tables(members, u, t, N, cond: int):
    """Suffix DP tables for the best achievable aggregate statistics.

    For a run over the aggregate's coordinates k.. with value budget b,
    table[k][b] is the maximum of sum phi(v_i) over choices 1 <= v_i
    (capped by N*u_i - 1 when u_i is finite) with sum v_i <= b, where

        cond 1:  phi(v) = v - min(v, u - 1)   (excess over the box interior)
        cond 2:  phi(v) = max(1, v - (N-1) u) (forced remainder floor)

    A point's aggregate fails its degree-1 split iff condition 1 exceeds
    (N-1) t or condition 2 exceeds t - 1.
    """
    budget = N * t - 1
    m = len(members)
    table = [[_NEG] * (budget + 1) for _ in range(m + 1)]
    table[m] = [0] * (budget + 1)
    for k in range(m - 1, -1, -1):
        ui = u[members[k] - 1]
        cap = budget if ui is None else min(budget, N * ui - 1)
        row = table[k]
        nxt = table[k + 1]
        for b in range(budget + 1):
            best = _NEG
            for v in range(1, min(cap, b) + 1):
                base = nxt[b - v]
                if base == _NEG:
                    continue
                if cond == 1:
                    g = base + (0 if ui is None else max(0, v - ui + 1))
                else:
                    g = base + (1 if ui is None else max(1, v - (N - 1) * ui))
                if g > best:
                    best = g
            row[b] = best
    return table


class _FailScanner:
    """Lex-order enumeration of interior points of N*P with no degree-1 split.

    Only valid when the aggregate facets are pairwise disjoint and the
    interior of P is nonempty (then no coordinate window can be empty and
    failure is a per-aggregate threshold event).  Subtrees that cannot
    reach any aggregate's threshold are pruned via the suffix tables.
    """

    def __init__(self, P: HPolytope, st: _Structure, N: int, budget: int):
        self.P, self.st, self.N, self.budget = P, st, N, budget
        self.n = st.n
        self.aggs = []
        for A, t in st.aggs:
            members = tuple(sorted(A))
            self.aggs.append({
                "members": members,
                "memberset": set(A),
                "t": t,
                "limit": N * t - 1,
                "phi1": _gain_tables(members, st.u, t, N, cond=1),
                "phi2": _gain_tables(members, st.u, t, N, cond=2),
                # upto[i] = members with vertex number <= i
                "upto": [sum(1 for m in members if m <= i)
                         for i in range(st.n + 2)],
            })
        self.nodes = 0

    def _alive(self, i: int, used, fixed1, fixed2) -> bool:
        """Can some completion of the current prefix fail its split?"""
        N = self.N
        for k, agg in enumerate(self.aggs):
            t = agg["t"]
            nxt = agg["upto"][i]
            b = agg["limit"] - used[k]
            if b < 0:
                continue
            best1 = agg["phi1"][nxt][b]
            if best1 != _NEG and fixed1[k] + best1 > (N - 1) * t:
                return True
            best2 = agg["phi2"][nxt][b]
            if best2 != _NEG and fixed2[k] + best2 > t - 1:
                return True
        return False

    def scan(self, collect: list | None, cap: int | None):
        """Yield-style scan; returns the first failing point, filling `collect`
        with every failing point when a list is passed."""
        st, N = self.st, self.N
        n = self.n
        point = [0] * n
        used = [0] * len(self.aggs)
        fixed1 = [0] * len(self.aggs)
        fixed2 = [0] * len(self.aggs)
        agg_of = [None] * n
        for k, agg in enumerate(self.aggs):
            for i in agg["memberset"]:
                agg_of[i - 1] = k
        first: list = []

        def rec(i: int) -> bool:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceededError(f"level scan exceeded {self.budget} nodes")
            if i == n:
                a = tuple(point)
                if collect is not None:
                    collect.append(a)
                    if cap is not None and len(collect) > cap:
                        raise BudgetExceededError(
                            f"more than {cap} points without degree-1 split"
                        )
                if not first:
                    first.append(a)
                return collect is None  # stop at the first hit unless collecting
            ui = st.u[i]
            hi = None if ui is None else N * ui - 1
            k = agg_of[i]
            if k is not None:
                agg = self.aggs[k]
                later = len(agg["members"]) - agg["upto"][i + 1]
                room = agg["limit"] - used[k] - later
                hi = room if hi is None else min(hi, room)
            for v in range(1, hi + 1):
                point[i] = v
                if k is not None:
                    agg = self.aggs[k]
                    uv = st.u[i]
                    used[k] += v
                    d1 = 0 if uv is None else max(0, v - uv + 1)
                    d2 = 1 if uv is None else max(1, v - (N - 1) * uv)
                    fixed1[k] += d1
                    fixed2[k] += d2
                if self._alive(i + 1, used, fixed1, fixed2):
                    if rec(i + 1):
                        return True
                if k is not None:
                    used[k] -= v
                    fixed1[k] -= d1
                    fixed2[k] -= d2
            return False

        rec(0)
        return first[0] if first else None


def _iter_failing(P: HPolytope, st: _Structure, N: int, budget: int,
                  interior1_empty: bool, collect: list | None, cap: int | None):
    """First (or all) interior points of N*P without a degree-1 split."""
    if st.disjoint and not interior1_empty:
        scanner = _FailScanner(P, st, N, budget)
        return scanner.scan(collect, cap)
    # fallback: plain interior enumeration with a per-point search
    first = None
    for a in iter_lattice_points(P, N, "interior", budget=budget):
        if interior1_empty or not _split_exists(P, st, a, N, 1):
            if first is None:
                first = a
            if collect is None:
                return first
            collect.append(a)
            if cap is not None and len(collect) > cap:
                raise BudgetExceededError(f"more than {cap} points without degree-1 split")
    return first


def level_star(P: HPolytope, max_level: int | None = None,
               budget: int = DEFAULT_NODE_BUDGET):
    """Decide level*; returns (verdict, witness) with the lex-least failing
    (N, point) on the negative side, or (False, None) for empty interior."""
    if max_level is not None and max_level < 2:
        raise ValueError("max_level must be at least 2")
    if count_lattice_points(P, 1, "interior", budget=budget) == 0:
        return False, None
    st = _structure(P)
    top = max_level if max_level is not None else max(2, P.n - 1)
    for N in range(2, top + 1):
        w = _iter_failing(P, st, N, budget, interior1_empty=False,
                          collect=None, cap=None)
        if w is not None:
            return False, (N, w)
    return True, None


def _scan_degrees(P: HPolytope, max_level: int | None, budget: int,
                  table_cap: int):
    """Reduced degrees over all scanned dilation levels.

    Returns (max_degree, table, saw_interior) where table maps (N, point)
    to the reduced degree for every scanned point of degree >= 2
    (degree-1 points are the generic case and are left implicit).
    """
    if max_level is not None and max_level < 1:
        raise ValueError("max_level must be at least 1")
    st = _structure(P)
    top = max_level if max_level is not None else max(1, P.n - 1)
    interior1 = count_lattice_points(P, 1, "interior", budget=budget)
    saw_interior = interior1 > 0
    max_degree = 1 if saw_interior else 0
    table: dict[tuple[int, ExponentVector], int] = {}
    for N in range(2, top + 1):
        if not saw_interior and count_lattice_points(P, N, "interior", budget=budget) > 0:
            saw_interior = True
            # interior of P itself is empty: no point at this level splits at r=1
        failing: list = []
        _iter_failing(P, st, N, budget, interior1_empty=(interior1 == 0),
                      collect=failing, cap=table_cap)
        for a in failing:
            r = 2
            while not _split_exists(P, st, a, N, r):
                r += 1
            table[(N, a)] = r
            if r > max_degree:
                max_degree = r
    return (max_degree if saw_interior or table else None), table, saw_interior


def int_star_degree(P: HPolytope, max_level: int | None = None,
                    budget: int = DEFAULT_NODE_BUDGET,
                    table_cap: int = DEFAULT_TABLE_CAP) -> int:
    """Largest reduced degree over dilation levels 1..max(1, n-1)."""
    max_degree, _table, saw_interior = _scan_degrees(P, max_level, budget, table_cap)
    if not saw_interior:
        top = max_level if max_level is not None else max(1, P.n - 1)
        raise ValueError(f"empty interior: no dilate up to level {top} has interior points")
    return max_degree


def conjecture_spectrum(P: HPolytope, max_level: int | None = None,
                        budget: int = DEFAULT_NODE_BUDGET,
                        table_cap: int = DEFAULT_TABLE_CAP) -> bool:
    """With d the int* degree: is every degree 1 <= i < d realized in the scan?"""
    max_degree, table, saw_interior = _scan_degrees(P, max_level, budget, table_cap)
    if not saw_interior:
        raise ValueError("empty interior: spectrum undefined")
    realized = {1} | set(table.values())
    return all(i in realized for i in range(1, max_degree))


@dataclass(frozen=True)
class LevelnessReport:
    """Verdicts and witnesses for one polytope.

    `reduced_degree_table` lists the scanned points of reduced degree at
    least 2; degree-1 points are ubiquitous and left implicit.
    `failure_witness` carries (level, point, explanation) when level* fails
    with a witness; an empty interior fails without one.
    """

    n: int
    interior_count_1: int
    pseudo_gorenstein: bool
    level: bool
    reflexive_up_to_translation: bool | None
    int_star_degree: int | None
    failure_witness: tuple[int, ExponentVector, str] | None
    reduced_degree_table: dict[tuple[int, ExponentVector], int]
    conjecture_spectrum_holds: bool | None
    scan_bound: int


def analyze_polytope(P: HPolytope, max_level: int | None = None,
                     budget: int = DEFAULT_NODE_BUDGET,
                     table_cap: int = DEFAULT_TABLE_CAP) -> LevelnessReport:
    from .lattice import reflexive_up_to_translation

    interior1 = count_lattice_points(P, 1, "interior", budget=budget)
    pg = interior1 == 1
    reflexive = reflexive_up_to_translation(P, budget=budget) if pg else None
    level, witness = level_star(P, max_level=max_level, budget=budget)
    if witness is not None:  # an empty interior fails without a pointwise witness
        witness = (witness[0], witness[1],
                   f"no interior summand of the base polytope splits off at level {witness[0]}")
    max_degree, table, saw_interior = _scan_degrees(P, max_level, budget, table_cap)
    if saw_interior:
        spectrum = all(i in ({1} | set(table.values())) for i in range(1, max_degree))
    else:
        max_degree, spectrum = None, None
    return LevelnessReport(
        n=P.n,
        interior_count_1=interior1,
        pseudo_gorenstein=pg,
        level=level,
        reflexive_up_to_translation=reflexive,
        int_star_degree=max_degree,
        failure_witness=witness,
        reduced_degree_table=table,
        conjecture_spectrum_holds=spectrum,
        scan_bound=max_level if max_level is not None else max(2, P.n - 1),
    )
