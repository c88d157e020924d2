"""Strong geodetic number of complete multipartite graphs.

A selection picks s_p vertices from each part p. Geodesics between two
chosen vertices of the same part have length two and can cover one
arbitrary vertex of any other part, so with

    P = sum_p C(s_p, 2)   (pair supply)
    U_p = n_p - s_p       (uncovered demand of part p)

the selection is strong geodetic iff the pairs can be matched onto the
uncovered vertices, each pair covering at most one vertex outside its own
part. That bipartite matching admits a closed Hall-type test, used
everywhere; the explicit matching search is kept as an independent
cross-check.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Sequence

from .graphs import Partition

__all__ = [
    "Selection",
    "TooManyPartsError",
    "validate_selection",
    "is_normal_form",
    "coverage_feasible",
    "coverage_feasible_matching",
    "sg_multipartite",
    "selection_certificate",
    "lp_lower_bound",
    "whole_parts_upper_bound",
    "sg_uniform",
    "MultipartiteBounds",
    "bounds_report",
]

Selection = tuple[int, ...]

PART_LIMIT = 22


class TooManyPartsError(RuntimeError):
    """Raised when a partition has more parts than the exact search allows."""


def validate_selection(partition: Partition, selection: Sequence[int]) -> None:
    if len(selection) != partition.r:
        raise ValueError(
            f"selection has {len(selection)} entries for {partition.r} parts"
        )
    for s, size in zip(selection, partition.parts):
        if not 0 <= s <= size:
            raise ValueError(f"selection entry {s} outside 0..{size}")


def is_normal_form(partition: Partition, selection: Sequence[int]) -> bool:
    """True when at most two parts are chosen partially (0 < s_p < n_p).

    Every optimal selection can be rearranged into this shape, which is
    what makes the exact search over configurations tractable.
    """
    validate_selection(partition, selection)
    partial = sum(1 for s, size in zip(selection, partition.parts) if 0 < s < size)
    return partial <= 2


def coverage_feasible(partition: Partition, selection: Sequence[int]) -> bool:
    """Closed-form feasibility test for a selection.

    Feasible iff total demand fits the pair supply and no single part's
    demand exceeds the supply available to it (its own pairs cover only
    other parts):

        U <= P   and   U_p <= P - C(s_p, 2) for every p.

    One chosen vertex total (no pairs) is feasible only when nothing is
    uncovered; the single-part graph (an independent set, every vertex
    simplicial) is the r = 1 instance of the same inequalities.
    """
    validate_selection(partition, selection)
    supply = sum(comb(s, 2) for s in selection)
    demands = [size - s for s, size in zip(selection, partition.parts)]
    total = sum(demands)
    if sum(selection) == 0:
        return False
    if total > supply:
        return False
    return all(
        d <= supply - comb(s, 2) for d, s in zip(demands, selection)
    )


def coverage_feasible_matching(partition: Partition, selection: Sequence[int]) -> bool:
    """The same feasibility question answered by an explicit matching.

    Builds one slot per same-part pair and augments uncovered vertices
    into slots of other parts (Kuhn's algorithm). Exponentially dumber
    than the closed form and kept that way on purpose: the two must agree
    on every input.
    """
    validate_selection(partition, selection)
    if sum(selection) == 0:
        return False
    slots: list[int] = []  # part index owning each pair-slot
    for p, s in enumerate(selection):
        slots.extend([p] * comb(s, 2))
    demand: list[int] = []  # part index of each uncovered vertex
    for p, (s, size) in enumerate(zip(selection, partition.parts)):
        demand.extend([p] * (size - s))
    if len(demand) > len(slots):
        return False
    matched: list[int | None] = [None] * len(slots)

    def augment(v: int, seen: list[bool]) -> bool:
        for j, owner in enumerate(slots):
            if owner == demand[v] or seen[j]:
                continue
            seen[j] = True
            if matched[j] is None or augment(matched[j], seen):
                matched[j] = v
                return True
        return False

    for v in range(len(demand)):
        if not augment(v, [False] * len(slots)):
            return False
    return True


def _class_configs(sizes: tuple[int, ...], count: int):
    """Selection multisets for `count` parts of one common size.

    Parts of equal size are interchangeable, so only the multiset of
    chosen amounts matters; yields nondecreasing tuples.
    """
    return combinations_with_replacement(sizes, count)


def sg_multipartite(partition: Partition) -> tuple[int, Selection]:
    """Exact optimum over all selections, with a lexicographically
    smallest witness among the optima (witness entries follow the
    partition's nonincreasing part order).

    Enumerates only normal-form selections, grouped by size class to
    skip permutations of interchangeable parts. Refuses partitions with
    more than PART_LIMIT parts, where enumeration stops being sensible.
    """
    if partition.r > PART_LIMIT:
        raise TooManyPartsError(
            f"{partition.r} parts exceed the exact-search limit {PART_LIMIT}"
        )
    if partition.r == 1:
        n = partition.parts[0]
        return n, (n,)
    classes: list[tuple[int, int]] = []  # (part size, multiplicity), size desc
    for size, mult in sorted(partition.multiplicities().items(), reverse=True):
        classes.append((size, mult))

    best: tuple[int, Selection] | None = None

    def expand(idx: int, chosen: list[tuple[int, ...]], partials: int):
        nonlocal best
        if idx == len(classes):
            sel: list[int] = []
            for picks in chosen:
                sel.extend(sorted(picks))
            selection = tuple(sel)
            k = sum(selection)
            if best is not None and (k, selection) >= best:
                return
            if coverage_feasible(partition, selection):
                best = (k, selection)
            return
        size, mult = classes[idx]
        for picks in _class_configs(tuple(range(size + 1)), mult):
            extra = sum(1 for s in picks if 0 < s < size)
            if partials + extra > 2:
                continue
            chosen.append(picks)
            expand(idx + 1, chosen, partials + extra)
            chosen.pop()

    expand(0, [], 0)
    assert best is not None  # selecting everything is always feasible for r >= 2
    return best


def selection_certificate(
    partition: Partition, selection: Sequence[int]
) -> list[tuple[tuple[int, int], int]] | None:
    """Concrete pair -> covered-vertex assignment, or None if infeasible.

    Vertices are numbered as in build_complete_multipartite (parts laid
    out consecutively). Chosen vertices are the first s_p of each part.
    Each returned entry maps a same-part chosen pair (u, v) to the vertex
    its geodesic u-w-v covers; pairs not needed for coverage are omitted.
    """
    validate_selection(partition, selection)
    if not coverage_feasible(partition, selection):
        return None
    blocks = partition.blocks()
    slots: list[tuple[int, tuple[int, int]]] = []
    for p, s in enumerate(selection):
        members = list(blocks[p])[:s]
        for u, v in combinations(members, 2):
            slots.append((p, (u, v)))
    demand: list[tuple[int, int]] = []
    for p, (s, size) in enumerate(zip(selection, partition.parts)):
        for w in list(blocks[p])[s:]:
            demand.append((p, w))
    matched: list[int | None] = [None] * len(slots)

    def augment(v: int, seen: list[bool]) -> bool:
        for j, (owner, _) in enumerate(slots):
            if owner == demand[v][0] or seen[j]:
                continue
            seen[j] = True
            if matched[j] is None or augment(matched[j], seen):
                matched[j] = v
                return True
        return False

    for v in range(len(demand)):
        if not augment(v, [False] * len(slots)):
            return None  # unreachable given coverage_feasible, kept defensive
    out: list[tuple[tuple[int, int], int]] = []
    for j, assignee in enumerate(matched):
        if assignee is not None:
            out.append((slots[j][1], demand[assignee][1]))
    out.sort()
    return out


def _l_threshold(partition: Partition) -> int:
    """Smallest positive l with sum_{j<=l} j*m_j >= sum_{j>l} C(j,2)*m_j.

    Exists for every partition: at l = max part size the right side is 0.
    """
    mults = partition.multiplicities()
    k = max(mults)
    for l in range(1, k + 1):
        lhs = sum(j * m for j, m in mults.items() if j <= l)
        rhs = sum(comb(j, 2) * m for j, m in mults.items() if j > l)
        if lhs >= rhs:
            return l
    raise AssertionError("unreachable")


def _lp_bound_enumerated(partition: Partition) -> int:
    """Fallback evaluation of the relaxation over every threshold.

    Evaluates the keep-everything-above-l formula at each l whose slack is
    nonnegative and returns the smallest value. The set includes the
    proven threshold, so the minimum can only be weaker (smaller), never
    invalid as a lower bound. Only consulted if the closed form ever
    leaves its proven domain.
    """
    mults = partition.multiplicities()
    k = max(mults)
    candidates = []
    for l in range(1, k + 1):
        slack = sum(j * m for j, m in mults.items() if j <= l) - sum(
            comb(j, 2) * m for j, m in mults.items() if j > l
        )
        if slack < 0:
            continue
        kept = sum(j * m for j, m in mults.items() if j > l)
        candidates.append(kept + -(-2 * slack // (l + 1)))
    return min(candidates)


def lp_lower_bound(partition: Partition) -> int:
    """Relaxation lower bound on sg, exact in closed form.

    Sorts the parts by size, keeps every part larger than a threshold l
    entirely, and pays for the remaining demand at the best rate the size-l
    parts offer. With m_j parts of size j,

        bound = sum_{j>l} j*m_j + ceil(2 * slack / (l + 1)),
        slack = sum_{j<=l} j*m_j - sum_{j>l} C(j,2)*m_j,

    where l is the smallest positive threshold making slack nonnegative.
    The fractional part count slack / C(l+1, 2) provably lands in
    [0, m_l]; if that invariant ever broke, the answer would come from the
    enumerated fallback instead (with a warning).
    """
    mults = partition.multiplicities()
    l = _l_threshold(partition)
    lhs = sum(j * m for j, m in mults.items() if j <= l)
    rhs = sum(comb(j, 2) * m for j, m in mults.items() if j > l)
    slack = lhs - rhs
    # Minimality of l forces slack < C(l+1,2) * m_l (and slack >= 0 by
    # choice of l), so the fractional part count below always fits.
    frac_parts = slack / comb(l + 1, 2)
    if not 0 <= frac_parts <= mults.get(l, 0):
        warnings.warn(
            "relaxation landed outside its proven domain; "
            "falling back to threshold enumeration",
            RuntimeWarning,
        )
        return _lp_bound_enumerated(partition)
    kept = sum(j * m for j, m in mults.items() if j > l)
    return kept + -(-2 * slack // (l + 1))


def whole_parts_upper_bound(partition: Partition) -> int:
    """Best selection that takes each part all-or-nothing.

    Exhausts subsets of size classes (counts per class, not per part),
    checking feasibility with the closed form. An honest upper bound on
    sg and often tight for near-uniform partitions.
    """
    if partition.r > PART_LIMIT:
        raise TooManyPartsError(
            f"{partition.r} parts exceed the exact-search limit {PART_LIMIT}"
        )
    classes = sorted(partition.multiplicities().items(), reverse=True)
    best = partition.n  # take everything: always feasible for r >= 2, and
    # equal to n for r = 1 where nothing less works

    def rec(idx: int, sel: list[tuple[int, ...]]):
        nonlocal best
        if idx == len(classes):
            selection: list[int] = []
            for picks in sel:
                selection.extend(sorted(picks))
            k = sum(selection)
            if k < best and coverage_feasible(partition, tuple(selection)):
                best = k
            return
        size, mult = classes[idx]
        for taken in range(mult + 1):
            sel.append((0,) * (mult - taken) + (size,) * taken)
            rec(idx + 1, sel)
            sel.pop()

    rec(0, [])
    return best


def sg_uniform(k: int, m: int) -> int:
    """sg of the m-fold join of independent sets of size k when k + 1
    divides 2mk: exactly 2mk / (k + 1). Raises otherwise."""
    if k < 1 or m < 1:
        raise ValueError("need k >= 1 and m >= 1")
    if (2 * m * k) % (k + 1) != 0:
        raise ValueError(f"k + 1 = {k + 1} does not divide 2mk = {2 * m * k}")
    return 2 * m * k // (k + 1)


@dataclass(frozen=True)
class MultipartiteBounds:
    """Lower/upper sandwich around sg, with the exact value when the
    partition is small enough to solve."""

    lp_lower: int
    whole_parts_upper: int
    exact: int | None


def bounds_report(partition: Partition, want_exact: bool = True) -> MultipartiteBounds:
    lower = lp_lower_bound(partition)
    upper = whole_parts_upper_bound(partition)
    exact = None
    if want_exact and partition.r <= PART_LIMIT and partition.n <= 64:
        exact = sg_multipartite(partition)[0]
    return MultipartiteBounds(lower, upper, exact)
