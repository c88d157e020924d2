"""Graph primitives for strong geodetic computations.

Vertices are 0-based integers. Graphs are immutable (hashable) so that
per-graph tables (distances, geodesic lists) can be memoized safely.
"""
from __future__ import annotations

import math
import re
import warnings
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

INF = math.inf

__all__ = [
    "INF",
    "Graph",
    "Partition",
    "Certificate",
    "GraphFormatError",
    "DisconnectedPairError",
    "GeodesicCapError",
    "build_complete_multipartite",
    "bfs_distances",
    "all_pairs_distances",
    "enumerate_geodesics",
    "connected_components",
    "simplicial_vertices",
    "verify_certificate",
    "parse_graph",
    "serialize_graph",
]


class GraphFormatError(ValueError):
    """Malformed graph text input."""


class DisconnectedPairError(ValueError):
    """No geodesic exists: the two vertices lie in different components."""


class GeodesicCapError(RuntimeError):
    """A vertex pair has more geodesics than the requested cap."""

    def __init__(self, u: int, v: int, cap: int):
        super().__init__(f"more than {cap} geodesics between {u} and {v}")
        self.pair = (u, v)
        self.cap = cap


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count and per-vertex neighbor sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise ValueError(f"edge {u}-{v} not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (u, v) with u < v."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])


_PART_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Partition:
    """Multiset of part sizes in canonical (nonincreasing) order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("partition needs at least one part")
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"part size {p!r} must be a positive integer")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be nonincreasing; use Partition.of()")

    @classmethod
    def of(cls, sizes) -> "Partition":
        """Canonicalize an arbitrary iterable of part sizes."""
        return cls(tuple(sorted(sizes, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse '3 2 1', '3,2,1', or compact '1^2,3^4' notation."""
        sizes: list[int] = []
        tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
        if not tokens:
            raise ValueError("empty partition text")
        for tok in tokens:
            m = _PART_TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad partition token {tok!r}")
            size = int(m.group(1))
            count = int(m.group(2)) if m.group(2) else 1
            if count < 1:
                raise ValueError(f"bad multiplicity in {tok!r}")
            sizes.extend([size] * count)
        return cls.of(sizes)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def blocks(self) -> list[range]:
        """Consecutive vertex ranges, one per part, in canonical order."""
        out, start = [], 0
        for p in self.parts:
            out.append(range(start, start + p))
            start += p
        return out

    def part_of(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        start = 0
        for idx, p in enumerate(self.parts):
            if v < start + p:
                return idx
            start += p
        raise AssertionError("unreachable")

    def multiplicities(self) -> dict[int, int]:
        """Map part size -> number of parts of that size."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def compact(self) -> str:
        """Compact text form, e.g. (3,2,2,1) -> '3,2^2,1'."""
        out = []
        for size in sorted(self.multiplicities(), reverse=True):
            count = self.multiplicities()[size]
            out.append(f"{size}^{count}" if count > 1 else f"{size}")
        return ",".join(out)


def build_complete_multipartite(p: Partition) -> Graph:
    """Complete multipartite graph on p: u ~ v iff u, v lie in different parts.

    Vertex blocks follow the canonical part order. Guarded to modest sizes
    since adjacency storage is Theta(n^2).
    """
    n = p.n
    if n > 4096:
        raise ValueError(f"refusing to materialize K_<{p.compact()}> with {n} vertices")
    part_id = [0] * n
    for idx, blk in enumerate(p.blocks()):
        for v in blk:
            part_id[v] = idx
    all_v = range(n)
    adj = tuple(
        frozenset(w for w in all_v if part_id[w] != part_id[v]) for v in all_v
    )
    return Graph(n, adj)


def bfs_distances(g: Graph, src: int) -> list[float]:
    """Hop distances from src; unreachable vertices get INF."""
    dist: list[float] = [INF] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] is INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list[float]]:
    """Full distance matrix by repeated BFS: O(n * (n + e))."""
    return [bfs_distances(g, s) for s in range(g.n)]


@lru_cache(maxsize=64)
def _distance_table(g: Graph) -> tuple[tuple[float, ...], ...]:
    return tuple(tuple(row) for row in all_pairs_distances(g))


def enumerate_geodesics(
    g: Graph, u: int, v: int, cap: int | None = None
) -> list[tuple[int, ...]]:
    """All shortest u-v paths in lexicographic order of their vertex sequences.

    Walks the shortest-path DAG (a vertex w is on some geodesic iff
    d(u,w) + d(w,v) = d(u,v)) depth-first with neighbors in increasing
    order. Raises GeodesicCapError as soon as the count would exceed cap,
    and DisconnectedPairError when no path exists.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("endpoint out of range")
    if u == v:
        raise ValueError("geodesics are defined for distinct endpoints")
    du = bfs_distances(g, u)
    if du[v] is INF:
        raise DisconnectedPairError(f"{u} and {v} are in different components")
    dv = bfs_distances(g, v)
    total = du[v]
    out: list[tuple[int, ...]] = []
    path = [u]

    def walk(w: int) -> None:
        if w == v:
            if cap is not None and len(out) >= cap:
                raise GeodesicCapError(u, v, cap)
            out.append(tuple(path))
            return
        for x in sorted(g.adj[w]):
            if du[x] == du[w] + 1 and du[x] + dv[x] == total:
                path.append(x)
                walk(x)
                path.pop()

    walk(u)
    return out


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def simplicial_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose neighborhood induces a clique (isolated ones count).

    A simplicial vertex is interior to no geodesic, so it must belong to
    every strong geodetic set.
    """
    out = []
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        if all(b in g.adj[a] for i, a in enumerate(nbrs) for b in nbrs[i + 1:]):
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class Certificate:
    """A strong geodetic certificate: the set S plus one fixed geodesic per
    unordered pair of S-vertices that shares a component.

    Paths are stored oriented so path[0] < path[-1] and sorted by endpoint
    pair, which makes certificates canonical and comparable.
    """

    members: tuple[int, ...]
    geodesics: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, members, paths) -> "Certificate":
        norm = []
        for path in paths:
            t = tuple(path)
            if t[0] > t[-1]:
                t = t[::-1]
            norm.append(t)
        norm.sort(key=lambda t: (t[0], t[-1], t))
        return cls(tuple(sorted(set(members))), tuple(norm))

    def chosen(self) -> dict[frozenset[int], tuple[int, ...]]:
        """Pair -> geodesic mapping."""
        return {frozenset((p[0], p[-1])): p for p in self.geodesics}

    def covered(self) -> set[int]:
        out = set(self.members)
        for p in self.geodesics:
            out.update(p)
        return out


def verify_certificate(g: Graph, cert: Certificate) -> str | None:
    """Check a certificate against g; None if valid, else the first violation.

    Valid means: every stored path is a geodesic between members, exactly
    the same-component member pairs appear (once each), and the union of
    path vertices together with the members covers V(g). A single-vertex
    graph accepts S = {v} with no pairs.
    """
    members = set(cert.members)
    for v in members:
        if not 0 <= v < g.n:
            return f"member {v} out of range"
    dist = _distance_table(g)
    seen_pairs: set[frozenset[int]] = set()
    for path in cert.geodesics:
        if len(path) < 2:
            return f"non-geodesic path {path}: fewer than two vertices"
        x, y = path[0], path[-1]
        if x not in members or y not in members:
            return f"non-geodesic path {path}: endpoints not both in S"
        if len(set(path)) != len(path):
            return f"non-geodesic path {path}: repeated vertex"
        for a, b in zip(path, path[1:]):
            if b not in g.adj[a]:
                return f"non-geodesic path {path}: {a}-{b} is not an edge"
        if len(path) - 1 != dist[x][y]:
            return f"non-geodesic path {path}: length {len(path) - 1} != d({x},{y})"
        key = frozenset((x, y))
        if key in seen_pairs:
            return f"duplicate pair ({x},{y})"
        seen_pairs.add(key)
    wanted = {
        frozenset((x, y))
        for x in members
        for y in members
        if x < y and dist[x][y] is not INF
    }
    missing = wanted - seen_pairs
    if missing:
        x, y = sorted(min(missing, key=sorted))
        return f"missing pair ({x},{y})"
    extra = seen_pairs - wanted
    if extra:
        x, y = sorted(min(extra, key=sorted))
        return f"unexpected pair ({x},{y})"
    uncovered = sorted(set(range(g.n)) - cert.covered())
    if uncovered:
        return f"uncovered vertices: {uncovered}"
    return None


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: '#' comments, one 'p edge <n> <e>' header, then
    'e <u> <v>' lines with 1-based endpoints.

    Self-loops are errors; duplicate edges warn and are dropped; an edge
    count that disagrees with the header warns.
    """
    n = declared = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    e_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                n, declared = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            if n < 1 or declared < 0:
                raise GraphFormatError(f"line {lineno}: bad header counts")
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}")
            e_lines += 1
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                warnings.warn(f"line {lineno}: duplicate edge {u}-{v} dropped")
                continue
            seen.add(key)
            edges.append(key)
        else:
            raise GraphFormatError(f"line {lineno}: malformed line {line!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    if declared != e_lines:
        warnings.warn(f"header declares {declared} edges, found {e_lines}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph, comments=()) -> str:
    """Canonical text form: comments, header, then sorted 1-based edges.

    parse_graph(serialize_graph(g)) == g, and serialization is a fixed
    point on already-canonical text.
    """
    edges = g.edges()
    lines = [f"# {c}" for c in comments]
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"
