"""Strong geodetic number of complete bipartite graphs K_{n,m}.

Every geodesic in K_{n,m} has length 0, 1, or 2, so a set S with s1
vertices on the n-side and s2 on the m-side is strong geodetic exactly
when the C(s1,2) same-side pairs can cover the m - s2 unchosen opposite
vertices and vice versa:

    C(s2,2) >= n - s1   and   C(s1,2) >= m - s2.

sg is the minimum s1 + s2 subject to those constraints; everything else
in this module (closed forms, classification, level sets, asymptotics,
the root-distance scan) is layered on that optimization.
"""
from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb, isqrt
from typing import Iterator, NamedTuple

__all__ = [
    "BipartiteSolution",
    "inv_binom_ceil",
    "sg_bipartite",
    "sg_balanced",
    "part_size_bound",
    "classify_sg_eq_k",
    "sg_large_m",
    "level_set",
    "RegimeCase",
    "RegimeSpec",
    "asymptotic_estimate",
    "RootPair",
    "quartic_roots",
    "ConjectureSample",
    "conjecture_sample",
    "conjecture_samples",
    "ConjectureScan",
    "conjecture_scan",
]

SIZE_CAP = 10**18
SCAN_CAP = 10**6


@dataclass(frozen=True)
class BipartiteSolution:
    """Optimal value k = s1 + s2 and a witness split for K_{n,m}."""

    n: int
    m: int
    k: int
    s1: int
    s2: int

    def __post_init__(self):
        if not (0 <= self.s1 <= self.n and 0 <= self.s2 <= self.m):
            raise ValueError("selection out of range")
        if self.k != self.s1 + self.s2:
            raise ValueError("k must equal s1 + s2")
        if comb(self.s2, 2) < self.n - self.s1 or comb(self.s1, 2) < self.m - self.s2:
            raise ValueError("selection does not satisfy the covering constraints")


def inv_binom_ceil(t: int) -> int:
    """Smallest s >= 0 with C(s,2) >= t (0 for t <= 0)."""
    if t <= 0:
        return 0
    s = (1 + isqrt(1 + 8 * t)) // 2
    while comb(s, 2) < t:
        s += 1
    while s > 0 and comb(s - 1, 2) >= t:
        s -= 1
    return s


def _validate_sides(n: int, m: int) -> None:
    if not (1 <= n <= SIZE_CAP and 1 <= m <= SIZE_CAP):
        raise ValueError(f"part sizes must be in 1..{SIZE_CAP}, got ({n}, {m})")


@lru_cache(maxsize=65536)
def _scan(n: int, m: int) -> tuple[int, int, int]:
    """Minimize s1 + s2 over the covering constraints; ties keep smallest s1.

    O(min(n, k)) integer arithmetic: for each s1 the least feasible s2 is
    max(inv_binom_ceil(n - s1), m - C(s1,2), 0), and the scan stops once
    s1 alone reaches the best total.
    """
    best = None
    for s1 in range(n + 1):
        if best is not None and s1 >= best[0]:
            break
        s2 = max(inv_binom_ceil(n - s1), m - comb(s1, 2), 0)
        if s2 > m:
            continue
        k = s1 + s2
        if best is None or k < best[0]:
            best = (k, s1, s2)
    assert best is not None  # s1 = n, s2 = max(0, m - C(n,2)) is always feasible
    return best


def sg_bipartite(n: int, m: int) -> BipartiteSolution:
    """Exact sg(K_{n,m}) with an optimal (s1, s2) split.

    For n beyond the scan cap only the dense regime m > C(n,2), where the
    optimum is n + (m - C(n,2)) with the whole n-side selected, is solved
    in closed form; other huge-n queries are refused (swap sides if m is
    small).
    """
    _validate_sides(n, m)
    if n > SCAN_CAP:
        if m > comb(n, 2):
            k = m + 1 - comb(n - 1, 2)
            return BipartiteSolution(n, m, k, n, k - n)
        raise ValueError(f"n={n} exceeds the exact-scan cap {SCAN_CAP}")
    k, s1, s2 = _scan(n, m)
    return BipartiteSolution(n, m, k, s1, s2)


def sg_balanced(n: int) -> int:
    """Closed-form sg(K_{n,n}) for n >= 6: 2*ceil((-1 + sqrt(8n+1)) / 2),
    minus one exactly when 8n - 7 is a perfect square. Integer arithmetic
    throughout.
    """
    if n < 6:
        raise ValueError("closed form requires n >= 6")
    c = inv_binom_ceil(n) - 1  # smallest c with c(c+1)/2 >= n
    q = 8 * n - 7
    r = isqrt(q)
    return 2 * c - (1 if r * r == q else 0)


def part_size_bound(k: int, i: int) -> int:
    """Largest opposite-part size reachable at level k when i chosen
    vertices sit on one side: k - 1 + C(max(i - 1, 2), 2).

    The clamp makes the bound equal k for all i <= 3 (including the i = -1
    and i = 0 sentinels used by the classification rectangles).
    """
    return k - 1 + comb(max(i - 1, 2), 2)


def classify_sg_eq_k(n: int, m: int, k: int) -> bool:
    """Decide sg(K_{n,m}) = k without solving the optimization.

    Two exceptional graphs are hard-coded (sg(K_{1,1}) = 2, sg(K_{2,2}) = 3);
    everywhere else the value is k iff (n, m) lies on one of the two
    boundary parabolas or inside one of the k+1 rectangles spanned by the
    part_size_bound thresholds.
    """
    _validate_sides(n, m)
    if (n, m) == (1, 1):
        return k == 2
    if (n, m) == (2, 2):
        return k == 3
    if k < 1:
        return False
    if n < k and m == part_size_bound(k, n):
        return True
    if m < k and n == part_size_bound(k, m):
        return True
    for i in range(k + 1):
        if (
            part_size_bound(k, i - 1) <= m <= part_size_bound(k, i)
            and part_size_bound(k, k - i - 1) <= n <= part_size_bound(k, k - i)
        ):
            return True
    return False


def sg_large_m(n: int, m: int) -> int:
    """Closed form in the lopsided regime.

    m > C(n,2) with n >= 3 gives m + 1 - C(n-1,2); n <= 3 with m > n gives
    m. Outside those domains a ValueError is raised.
    """
    _validate_sides(n, m)
    if n >= 3 and m > comb(n, 2):
        return m + 1 - comb(n - 1, 2)
    if n <= 3 and m > n:
        return m
    raise ValueError(f"({n}, {m}) is outside the lopsided-regime domain")


def level_set(k: int) -> list[tuple[int, int]]:
    """All (n, m) with sg(K_{n,m}) = k, sorted; k >= 2.

    The search box [1, part_size_bound(k,k) + k]^2 provably contains every
    solution: beyond it one side is too big for any rectangle or parabola
    at level k.
    """
    if k < 2:
        raise ValueError("level sets start at k = 2")
    hi = part_size_bound(k, k) + k
    return [
        (n, m)
        for n in range(1, hi + 1)
        for m in range(1, hi + 1)
        if _scan(n, m)[0] == k
    ]


class RegimeCase(Enum):
    """Growth regimes for m as a function of n (m >= n >= 2 throughout)."""

    SUPER_QUADRATIC = "super-quadratic"    # m = a*n^b, b > 2
    QUADRATIC_DENSE = "quadratic-dense"    # m = a*n^2, a > 1/2
    HALF_SQUARE_ABOVE = "half-square-above"  # m = n^2/2 + g*n, g > -1/2
    HALF_SQUARE_BELOW = "half-square-below"  # m = n^2/2 + g*n, g <= -1/2
    QUADRATIC_SPARSE = "quadratic-sparse"  # m = a*n^2, 0 < a < 1/2
    MID_POWER = "mid-power"                # m = a*n^b, 1 < b < 2
    LINEAR = "linear"                      # m = a*n, a >= 1


@dataclass(frozen=True)
class RegimeSpec:
    """A regime tag plus the parameters that its growth law needs."""

    case: RegimeCase
    alpha: float | None = None
    beta: float | None = None
    gamma: float | None = None

    def __post_init__(self):
        c, a, b, g = self.case, self.alpha, self.beta, self.gamma
        if c is RegimeCase.SUPER_QUADRATIC:
            if a is None or b is None or a <= 0 or b <= 2:
                raise ValueError("super-quadratic needs alpha > 0 and beta > 2")
        elif c is RegimeCase.QUADRATIC_DENSE:
            if a is None or a <= 0.5:
                raise ValueError("quadratic-dense needs alpha > 1/2")
        elif c is RegimeCase.HALF_SQUARE_ABOVE:
            if g is None or g <= -0.5:
                raise ValueError("half-square-above needs gamma > -1/2")
        elif c is RegimeCase.HALF_SQUARE_BELOW:
            if g is None or g > -0.5:
                raise ValueError("half-square-below needs gamma <= -1/2")
        elif c is RegimeCase.QUADRATIC_SPARSE:
            if a is None or not 0 < a < 0.5:
                raise ValueError("quadratic-sparse needs 0 < alpha < 1/2")
        elif c is RegimeCase.MID_POWER:
            if a is None or b is None or a <= 0 or not 1 < b < 2:
                raise ValueError("mid-power needs alpha > 0 and 1 < beta < 2")
        elif c is RegimeCase.LINEAR:
            if a is None or a < 1:
                raise ValueError("linear needs alpha >= 1")

    def expected_m(self, n: int) -> int:
        """The integer m this regime prescribes at a given n."""
        c = self.case
        if c in (RegimeCase.HALF_SQUARE_ABOVE, RegimeCase.HALF_SQUARE_BELOW):
            return round(n * n / 2 + self.gamma * n)
        if c is RegimeCase.LINEAR:
            return round(self.alpha * n)
        beta = 2.0 if c in (RegimeCase.QUADRATIC_DENSE, RegimeCase.QUADRATIC_SPARSE) else self.beta
        return round(self.alpha * n**beta)


def asymptotic_estimate(spec: RegimeSpec, n: int) -> float:
    """Growth-law estimate of sg(K_{n, m(n)}) for the given regime.

    Most regimes evaluate the leading term. The sparse-quadratic regime
    also needs its second term sqrt(2(1 - sqrt(2a)) n): the optimum there
    splits as s1 ~ sqrt(2a)n plus s2 ~ sqrt(2(n - s1)), and the second
    summand decays only like n^(-1/2) relative to the first, far too slowly
    to ignore at practical n.
    """
    if n < 2:
        raise ValueError("estimates need n >= 2")
    a, b, g = spec.alpha, spec.beta, spec.gamma
    c = spec.case
    if c is RegimeCase.SUPER_QUADRATIC:
        return a * n**b
    if c is RegimeCase.QUADRATIC_DENSE:
        return (a - 0.5) * n * n
    if c is RegimeCase.HALF_SQUARE_ABOVE:
        return (g + 1.5) * n
    if c is RegimeCase.HALF_SQUARE_BELOW:
        return float(n)
    if c is RegimeCase.QUADRATIC_SPARSE:
        q = math.sqrt(2 * a)
        return q * n + math.sqrt(2 * (1 - q) * n)
    if c is RegimeCase.MID_POWER:
        return math.sqrt(2 * a) * n ** (b / 2)
    if c is RegimeCase.LINEAR:
        return math.sqrt(2) * (1 + math.sqrt(a)) * math.sqrt(n)
    raise AssertionError("unreachable")


class RootPair(NamedTuple):
    """A real solution (k, i) of the two-sided boundary system."""

    k: float
    i: float


def _quartic_t_coeffs(n: int, m: int) -> tuple[float, float, float, float, float]:
    """Monic quartic in t = k - 3 equivalent to the boundary system.

    Eliminating i from m = k - 1 + C(i-1, 2) via
    i = (3 + sqrt(8(m-k+1)+1)) / 2 and substituting into
    n = k - 1 + C(k-i-1, 2), then squaring twice, yields

        t^4 + 8 t^3 + (15 - 4(n + m)) t^2 + 4 (m - n)^2 = 0.

    Squaring can add spurious roots; callers must filter by residual.
    """
    return (1.0, 8.0, float(15 - 4 * (n + m)), 0.0, float(4 * (m - n) ** 2))


def _durand_kerner(coeffs) -> list[complex]:
    """All roots of a monic quartic by simultaneous (Weierstrass) iteration.

    Starts on a circle safely outside the Fujiwara root bound, with an
    irrational angle offset so real-coefficient symmetry cannot trap the
    iteration on the real axis.
    """
    _, c3, c2, c1, c0 = coeffs
    radius = 1.0 + 2.0 * max(
        abs(c3), abs(c2) ** 0.5, abs(c1) ** (1 / 3), abs(c0) ** 0.25
    )
    roots = [radius * cmath.exp(1j * (0.4 + 2 * math.pi * j / 4)) for j in range(4)]
    for _ in range(200):
        done = True
        nxt = []
        for j, z in enumerate(roots):
            p = (((z + c3) * z + c2) * z + c1) * z + c0
            d = 1.0 + 0j
            for t, w in enumerate(roots):
                if t != j:
                    d *= z - w
            if d == 0:
                d = 1e-30
            delta = p / d
            z = z - delta
            if abs(delta) > 1e-13 * (1.0 + abs(z)):
                done = False
            nxt.append(z)
        roots = nxt
        if done:
            break
    return roots


def _newton_polish(coeffs, t: float) -> float:
    _, c3, c2, c1, c0 = coeffs
    for _ in range(8):
        p = (((t + c3) * t + c2) * t + c1) * t + c0
        dp = ((4 * t + 3 * c3) * t + 2 * c2) * t + c1
        if dp == 0:
            break
        step = p / dp
        t -= step
        if abs(step) <= 1e-14 * (1.0 + abs(t)):
            break
    return t


RESIDUAL_TOL = 1e-6


def quartic_roots(n: int, m: int) -> tuple[RootPair, ...]:
    """Real solutions k of the boundary system
    m = k - 1 + C(i-1,2), n = k - 1 + C(k-i-1,2) (C as a real polynomial),
    each with its back-substituted i, sorted by k.

    Roots of the eliminated quartic are kept only when some i branch
    reproduces both equations to within RESIDUAL_TOL, which removes the
    artifacts introduced by squaring.
    """
    _validate_sides(n, m)
    coeffs = _quartic_t_coeffs(n, m)
    accepted: list[RootPair] = []
    for z in _durand_kerner(coeffs):
        if abs(z.imag) > 1e-7 * (1.0 + abs(z.real)):
            continue
        t = _newton_polish(coeffs, z.real)
        k = t + 3.0
        disc = 8.0 * (m - k + 1.0) + 1.0
        if disc < -RESIDUAL_TOL:
            continue
        x = math.sqrt(max(disc, 0.0))
        best: tuple[float, float] | None = None
        for i in ((3.0 + x) / 2.0, (3.0 - x) / 2.0):
            r1 = abs(m - (k - 1.0 + (i - 1.0) * (i - 2.0) / 2.0))
            r2 = abs(n - (k - 1.0 + (k - i - 1.0) * (k - i - 2.0) / 2.0))
            resid = max(r1, r2)
            if resid <= RESIDUAL_TOL and (best is None or resid < best[0]):
                best = (resid, i)
        if best is not None:
            accepted.append(RootPair(k, best[1]))
    accepted.sort(key=lambda rp: rp.k)
    deduped: list[RootPair] = []
    for rp in accepted:
        if not deduped or abs(rp.k - deduped[-1].k) > 1e-7:
            deduped.append(rp)
    return tuple(deduped)


@dataclass(frozen=True)
class ConjectureSample:
    """One scan point: sg(K_{n,m}), the accepted real roots, and the gap
    min_root |sg - k| (inf when no root survives the residual filter)."""

    n: int
    m: int
    sg: int
    roots: tuple[float, ...]
    gap: float


def conjecture_sample(n: int, m: int) -> ConjectureSample:
    sg = sg_bipartite(n, m).k
    roots = tuple(rp.k for rp in quartic_roots(n, m))
    gap = min((abs(sg - k) for k in roots), default=math.inf)
    return ConjectureSample(n, m, sg, roots, gap)


def conjecture_samples(n: int) -> Iterator[ConjectureSample]:
    """Samples for every m in [n, C(n,2)] in ascending order."""
    if n < 4:
        raise ValueError("the scan range is empty below n = 4")
    for m in range(n, comb(n, 2) + 1):
        yield conjecture_sample(n, m)


@dataclass(frozen=True)
class ConjectureScan:
    """Scan summary: the largest finite gap, where it occurs (smallest such
    m on ties), and any m whose quartic had no surviving real root."""

    n: int
    max_gap: float
    argmax_m: int
    missing: tuple[int, ...]


def conjecture_scan(n: int, threads: int = 1) -> ConjectureScan:
    """Max over m in [n, C(n,2)] of the root-distance gap.

    Each m is solved independently (cold-started), so the result is
    identical for any thread count; threads only partition the range.
    """
    if n < 4:
        raise ValueError("the scan range is empty below n = 4")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    lo, hi = n, comb(n, 2)

    def run_chunk(bounds: tuple[int, int]):
        a, b = bounds
        best_gap, best_m = -1.0, -1
        missing = []
        for m in range(a, b):
            s = conjecture_sample(n, m)
            if math.isinf(s.gap):
                missing.append(m)
            elif s.gap > best_gap:
                best_gap, best_m = s.gap, m
        return best_gap, best_m, missing

    total = hi - lo + 1
    if threads == 1 or total < 2 * threads:
        chunks = [(lo, hi + 1)]
    else:
        step = (total + threads - 1) // threads
        chunks = [(a, min(a + step, hi + 1)) for a in range(lo, hi + 1, step)]
    if len(chunks) == 1:
        results = [run_chunk(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_chunk, chunks))
    best_gap, best_m = -1.0, -1
    missing: list[int] = []
    for gap, m, miss in results:  # chunk order = ascending m, so ties stay leftmost
        missing.extend(miss)
        if m >= 0 and gap > best_gap:
            best_gap, best_m = gap, m
    return ConjectureScan(n, best_gap, best_m, tuple(missing))
