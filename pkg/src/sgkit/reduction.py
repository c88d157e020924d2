"""Dominating-set to strong-geodetic-set reduction on bipartite graphs.

Given a bipartite graph G with sides X and Y (both nonempty), the target
graph G' adds a connector edge u1-u2, wires u2 to all of X and u1 to all
of Y, and hangs a private degree-one twin v' off the connector opposite
each original vertex v (x' on u2, y' on u1). Then for every k,

    G has a dominating set of size <= k
        iff  G' has a strong geodetic set of size <= k + |V(G)|.

The twins are simplicial, so all |V(G)| of them are forced into any
strong geodetic set; a dominating set D lifts to D plus the twins, with
geodesics through the connector covering everything D does not."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Certificate,
    Graph,
    enumerate_geodesics,
    verify_certificate,
)
from .oracle import OracleLimits, minimum_dominating_set, strong_geodetic_number_exact

__all__ = [
    "two_coloring",
    "ReductionInstance",
    "build_reduction",
    "forward_certificate",
    "verify_equivalence",
]


def two_coloring(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bipartition (X, Y) by breadth-first 2-coloring, or ValueError if an
    odd cycle exists. Deterministic: components are rooted at their
    smallest vertex, which always lands in X."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for u in queue:
                for v in sorted(g.adj[u]):
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        nxt.append(v)
                    elif color[v] == color[u]:
                        raise ValueError(
                            f"graph is not bipartite: edge ({u}, {v}) inside one color class"
                        )
            queue = nxt
    side_x = tuple(v for v in range(g.n) if color[v] == 0)
    side_y = tuple(v for v in range(g.n) if color[v] == 1)
    return side_x, side_y


@dataclass(frozen=True)
class ReductionInstance:
    """A built reduction: source, its bipartition, the target graph, and
    the vertex layout inside the target.

    Target vertex layout: originals keep their ids 0..n-1, u1 = n,
    u2 = n + 1, and the twin of original v is n + 2 + v.
    """

    source: Graph
    side_x: tuple[int, ...]
    side_y: tuple[int, ...]
    budget: int
    target: Graph
    target_budget: int
    u1: int
    u2: int
    twins: tuple[int, ...]

    def twin(self, v: int) -> int:
        return self.source.n + 2 + v


def build_reduction(
    g: Graph,
    budget: int,
    sides: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
) -> ReductionInstance:
    """Construct the target instance for 'dominating set of size <= budget'.

    Requires both sides nonempty: with an empty side the connector pair
    u1, u2 cannot be covered by any geodesic among forced vertices and
    the equivalence breaks (K_1 is the smallest such graph). Callers with
    an edgeless one-vertex graph should answer domination directly.
    """
    if sides is None:
        sides = two_coloring(g)
    side_x, side_y = tuple(sides[0]), tuple(sides[1])
    if not side_x or not side_y:
        raise ValueError("reduction needs both bipartition sides nonempty")
    if sorted(side_x + side_y) != list(range(g.n)):
        raise ValueError("sides must partition the vertex set")
    for u in range(g.n):
        for v in g.adj[u]:
            if (u in side_x) == (v in side_x):
                raise ValueError(f"edge ({u}, {v}) inside one side")
    if not 0 <= budget <= g.n:
        raise ValueError("budget must be between 0 and |V|")
    n = g.n
    u1, u2 = n, n + 1
    edges = list(g.edges())
    edges.append((u1, u2))
    for x in side_x:
        edges.append((x, u2))
        edges.append((u2, n + 2 + x))
    for y in side_y:
        edges.append((y, u1))
        edges.append((u1, n + 2 + y))
    target = Graph.from_edges(2 * n + 2, edges)
    return ReductionInstance(
        source=g,
        side_x=side_x,
        side_y=side_y,
        budget=budget,
        target=target,
        target_budget=budget + n,
        u1=u1,
        u2=u2,
        twins=tuple(n + 2 + v for v in range(n)),
    )


def forward_certificate(
    inst: ReductionInstance, dominating: tuple[int, ...]
) -> Certificate:
    """Lift a dominating set of the source to a strong geodetic
    certificate for S = dominating + all twins on the target.

    Coverage recipe: an original y on the u1 side not in the dominating
    set is swept by x - y - u1 - y' where x is its smallest dominator
    neighbor (necessarily on the other side); symmetrically for the u2
    side. The connector pair u1, u2 is swept by the unique geodesic
    between a twin on each side, x' - u2 - u1 - y'. Every remaining pair
    of S gets its first enumerated geodesic; coverage is complete before
    they are assigned.
    """
    g, t = inst.source, inst.target
    dom = set(dominating)
    for v in dom:
        if not 0 <= v < g.n:
            raise ValueError(f"dominating-set vertex {v} not in the source graph")
    for v in range(g.n):
        if v not in dom and not (g.adj[v] & dom):
            raise ValueError(f"set does not dominate vertex {v}")
    members = sorted(dom | set(inst.twins))
    mset = set(members)
    designated: dict[tuple[int, int], tuple[int, ...]] = {}

    x_side = set(inst.side_x)
    for v in range(g.n):
        if v in dom:
            continue
        helper = min(g.adj[v] & dom)
        if v in x_side:
            path = (helper, v, inst.u2, inst.twin(v))
        else:
            path = (helper, v, inst.u1, inst.twin(v))
        a, b = path[0], path[-1]
        designated[(min(a, b), max(a, b))] = path

    x0, y0 = min(inst.side_x), min(inst.side_y)
    tx, ty = inst.twin(x0), inst.twin(y0)
    connector = (tx, inst.u2, inst.u1, ty)
    a, b = connector[0], connector[-1]
    designated[(min(a, b), max(a, b))] = connector

    paths: list[tuple[int, ...]] = []
    for u, v in combinations(members, 2):
        if (u, v) in designated:
            paths.append(designated[(u, v)])
        else:
            paths.append(enumerate_geodesics(t, u, v, cap=1024)[0])
    assert all(u in mset and v in mset for (u, v) in designated)
    return Certificate.build(members, paths)


def verify_equivalence(
    g: Graph,
    sides: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
    limits: OracleLimits | None = None,
) -> bool:
    """Check the reduction end to end on one source graph.

    Computes the exact domination number, builds the target, computes its
    exact strong geodetic number with an oracle wide enough for the
    doubled vertex count, and confirms

        sg(target) == domination number + |V(source)|

    (the number form of the per-budget equivalence, since both quantities
    are thresholds of monotone properties). Also lifts a minimum
    dominating set and checks the forward certificate verifies cleanly.
    """
    limits = limits or OracleLimits()
    gamma, dom = minimum_dominating_set(g, limits)
    inst = build_reduction(g, gamma, sides)
    wide = OracleLimits(
        max_vertices=max(limits.max_vertices, inst.target.n),
        geodesic_cap=max(limits.geodesic_cap, 4096),
        node_budget=limits.node_budget,
    )
    sg, _ = strong_geodetic_number_exact(inst.target, wide)
    if sg != gamma + g.n:
        return False
    cert = forward_certificate(inst, dom)
    return verify_certificate(inst.target, cert) is None
