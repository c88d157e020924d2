"""Brute-force oracles: exact strong geodetic number and exact domination
number for small graphs.

These are the ground truth the closed-form solvers are validated against,
so they favor transparency over speed and refuse instances beyond their
stated budgets instead of silently degrading.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graphs import (
    INF,
    Certificate,
    GeodesicCapError,
    Graph,
    _distance_table,
    enumerate_geodesics,
    simplicial_vertices,
)

__all__ = [
    "OracleLimits",
    "BudgetExceededError",
    "is_strong_geodetic_set",
    "strong_geodetic_number_exact",
    "minimum_dominating_set",
    "dominating_number_exact",
]


class BudgetExceededError(RuntimeError):
    """The search ran out of budget; the answer is indeterminate, NOT 'no'."""


@dataclass(frozen=True)
class OracleLimits:
    """Resource limits for the exhaustive searches.

    max_vertices bounds the graph size, geodesic_cap bounds the number of
    geodesics enumerated per vertex pair, node_budget bounds backtracking
    choice nodes per feasibility call.
    """

    max_vertices: int = 12
    geodesic_cap: int = 64
    node_budget: int = 2_000_000


@lru_cache(maxsize=32)
def _geodesic_table(
    g: Graph, cap: int
) -> dict[tuple[int, int], tuple[tuple[int, ...], ...]]:
    """All geodesics for every connected pair, keyed by (u, v) with u < v."""
    dist = _distance_table(g)
    table = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if dist[u][v] is not INF:
                table[(u, v)] = tuple(enumerate_geodesics(g, u, v, cap=cap))
    return table


def is_strong_geodetic_set(
    g: Graph, members, limits: OracleLimits | None = None
) -> Certificate | None:
    """Decide whether `members` is a strong geodetic set of g.

    Returns a Certificate fixing one geodesic per same-component pair when
    the answer is yes, None when no assignment covers V(g), and raises
    BudgetExceededError when the search budget runs out (indeterminate:
    the caller must not treat that as infeasible).

    Backtracks over pairs ordered by fewest geodesics first. Branches that
    produce an already-seen newly-covered set are merged, and a branch is
    pruned when even the best remaining interior coverage cannot reach the
    uncovered count. Pairs at distance 1 contribute their forced edge.
    """
    limits = limits or OracleLimits()
    if g.n > limits.max_vertices + 4:
        raise BudgetExceededError(
            f"{g.n} vertices exceeds the feasibility limit {limits.max_vertices + 4}"
        )
    S = sorted(set(members))
    for v in S:
        if not 0 <= v < g.n:
            raise ValueError(f"member {v} out of range")
    dist = _distance_table(g)
    try:
        table = _geodesic_table(g, limits.geodesic_cap)
    except GeodesicCapError as exc:
        raise BudgetExceededError(str(exc)) from exc

    full = (1 << g.n) - 1
    covered = 0
    for v in S:
        covered |= 1 << v
    fixed_paths: list[tuple[int, ...]] = []
    open_pairs: list[tuple[tuple[int, ...], ...]] = []
    for x, y in combinations(S, 2):
        if dist[x][y] is INF:
            continue  # no geodesic exists; the pair is absent from the certificate
        if dist[x][y] == 1:
            fixed_paths.append((x, y))
        else:
            open_pairs.append(table[(x, y)])

    masks = [
        tuple((p, _mask(p)) for p in paths) for paths in open_pairs
    ]
    union = covered
    for choices in masks:
        for _, m in choices:
            union |= m
    if union != full:
        return None

    # order by fewest geodesics, then by pair, for determinism
    order = sorted(range(len(masks)), key=lambda i: (len(masks[i]), masks[i][0][0]))
    masks = [masks[i] for i in order]
    smask = covered
    static_gain = [
        max((m & ~smask).bit_count() for _, m in choices) for choices in masks
    ]
    suffix = [0] * (len(masks) + 1)
    for i in range(len(masks) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + static_gain[i]

    chosen: list[tuple[int, ...] | None] = [None] * len(masks)
    budget = limits.node_budget

    def search(i: int, cov: int) -> bool:
        nonlocal budget
        if cov == full:
            for j in range(i, len(masks)):
                chosen[j] = masks[j][0][0]
            return True
        if i == len(masks):
            return False
        if g.n - cov.bit_count() > suffix[i]:
            return False
        seen: set[int] = set()
        for path, m in masks[i]:
            new = m & ~cov
            if new in seen:
                continue
            seen.add(new)
            budget -= 1
            if budget < 0:
                raise BudgetExceededError("backtracking node budget exhausted")
            chosen[i] = path
            if search(i + 1, cov | new):
                return True
        return False

    if not search(0, covered):
        return None
    return Certificate.build(S, fixed_paths + [p for p in chosen if p is not None])


def _mask(path: tuple[int, ...]) -> int:
    m = 0
    for v in path:
        m |= 1 << v
    return m


def strong_geodetic_number_exact(
    g: Graph, limits: OracleLimits | None = None
) -> tuple[int, Certificate]:
    """Exact sg(g) with a witness certificate, by subset search.

    Candidate sets are enumerated by size then lexicographically, always
    containing every simplicial vertex (those can only be covered as
    endpoints). S = V(g) is always feasible, so the search terminates.
    """
    limits = limits or OracleLimits()
    if g.n > limits.max_vertices:
        raise BudgetExceededError(
            f"{g.n} vertices exceeds limits.max_vertices={limits.max_vertices}"
        )
    forced = list(simplicial_vertices(g))
    free = sorted(set(range(g.n)) - set(forced))
    for k in range(max(1, len(forced)), g.n + 1):
        want = k - len(forced)
        if want > len(free):
            continue
        for extra in combinations(free, want):
            cert = is_strong_geodetic_set(g, forced + list(extra), limits)
            if cert is not None:
                return k, cert
    raise AssertionError("unreachable: V(g) is always a strong geodetic set")


def minimum_dominating_set(
    g: Graph, limits: OracleLimits | None = None
) -> tuple[int, tuple[int, ...]]:
    """Smallest dominating set by subset search, smallest size first and
    lexicographically first within a size.

    Runs on reduction source graphs, so the vertex allowance is slightly
    wider than for the strong geodetic search.
    """
    limits = limits or OracleLimits()
    if g.n > limits.max_vertices + 4:
        raise BudgetExceededError(
            f"{g.n} vertices exceeds the domination limit {limits.max_vertices + 4}"
        )
    closed = [(1 << v) | _mask(tuple(g.adj[v])) for v in range(g.n)]
    full = (1 << g.n) - 1
    budget = limits.node_budget
    for k in range(0, g.n + 1):
        for subset in combinations(range(g.n), k):
            budget -= 1
            if budget < 0:
                raise BudgetExceededError("domination search budget exhausted")
            m = 0
            for v in subset:
                m |= closed[v]
            if m == full:
                return k, subset
    raise AssertionError("unreachable: V(g) dominates g")


def dominating_number_exact(g: Graph, limits: OracleLimits | None = None) -> int:
    """Exact domination number; see minimum_dominating_set."""
    return minimum_dominating_set(g, limits)[0]
