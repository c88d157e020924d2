import pytest

from sgkit.bipartite import sg_bipartite
from sgkit.graphs import (
    Graph,
    Partition,
    build_complete_multipartite,
    simplicial_vertices,
    verify_certificate,
)
from sgkit.oracle import (
    BudgetExceededError,
    OracleLimits,
    dominating_number_exact,
    is_strong_geodetic_set,
    minimum_dominating_set,
    strong_geodetic_number_exact,
)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


PETERSEN = Graph.from_edges(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
)


def test_one_side_of_k22_is_not_strong_geodetic():
    g = build_complete_multipartite(Partition.of((2, 2)))
    assert is_strong_geodetic_set(g, [0, 1]) is None


def test_k22_has_a_three_vertex_certificate():
    g = build_complete_multipartite(Partition.of((2, 2)))
    cert = is_strong_geodetic_set(g, [0, 1, 2])
    assert cert is not None
    assert verify_certificate(g, cert) is None


def test_membership_requires_covering_with_no_pairs():
    # a singleton covers a one-vertex graph but not a two-vertex one
    assert is_strong_geodetic_set(Graph.from_edges(1, []), [0]) is not None
    assert is_strong_geodetic_set(path_graph(2), [0]) is None


@pytest.mark.parametrize(
    "g,want",
    [
        (path_graph(2), 2),
        (path_graph(4), 2),
        (cycle_graph(4), 3),  # C4 = K_{2,2}: one chosen diagonal geodesic misses a vertex
        (cycle_graph(5), 3),
        (cycle_graph(6), 3),
        (build_complete_multipartite(Partition.of((3, 3))), 3),
        (build_complete_multipartite(Partition.of((1, 4))), 4),
        (PETERSEN, 4),
    ],
)
def test_exact_values_on_small_graphs(g, want):
    k, cert = strong_geodetic_number_exact(g)
    assert k == want
    assert len(cert.members) == k
    assert verify_certificate(g, cert) is None


def test_disconnected_graph_counts_every_component():
    # two disjoint edges: all four vertices are simplicial
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    k, cert = strong_geodetic_number_exact(g)
    assert k == 4
    assert cert.members == (0, 1, 2, 3)
    # cross-component pairs carry no geodesic
    assert len(cert.geodesics) == 2


def test_single_vertex_graph():
    k, cert = strong_geodetic_number_exact(Graph.from_edges(1, []))
    assert k == 1
    assert cert.members == (0,)
    assert cert.geodesics == ()


def test_simplicial_vertices_forced_into_solution():
    g = path_graph(5)
    k, cert = strong_geodetic_number_exact(g)
    assert set(simplicial_vertices(g)) <= set(cert.members)


def test_oracle_agrees_with_bipartite_scan():
    for n in range(1, 5):
        for m in range(1, 5):
            g = build_complete_multipartite(Partition.of((n, m)))
            assert strong_geodetic_number_exact(g)[0] == sg_bipartite(n, m).k


def test_vertex_limit_enforced():
    g = build_complete_multipartite(Partition.of((7, 7)))
    with pytest.raises(BudgetExceededError):
        strong_geodetic_number_exact(g)


def test_node_budget_exhaustion_raises():
    g = build_complete_multipartite(Partition.of((4, 4)))
    with pytest.raises(BudgetExceededError):
        strong_geodetic_number_exact(g, OracleLimits(node_budget=1))


def test_geodesic_cap_surfaces_as_budget_error():
    g = build_complete_multipartite(Partition.of((3, 3)))
    with pytest.raises(BudgetExceededError):
        is_strong_geodetic_set(g, [0, 1, 2], OracleLimits(geodesic_cap=2))


def test_membership_rejects_out_of_range_vertices():
    with pytest.raises(ValueError):
        is_strong_geodetic_set(path_graph(3), [0, 7])


def test_minimum_dominating_set_values():
    assert minimum_dominating_set(path_graph(4)) == (2, (0, 2))
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert minimum_dominating_set(star) == (1, (0,))
    assert dominating_number_exact(cycle_graph(5)) == 2
    assert dominating_number_exact(build_complete_multipartite(Partition.of((3, 3)))) == 2


def test_minimum_dominating_set_actually_dominates():
    for g in (path_graph(6), cycle_graph(7), PETERSEN):
        k, dom = minimum_dominating_set(g)
        assert len(dom) == k
        covered = set(dom)
        for v in dom:
            covered |= g.adj[v]
        assert covered == set(range(g.n))


def test_domination_budget_exhaustion():
    with pytest.raises(BudgetExceededError):
        minimum_dominating_set(PETERSEN, OracleLimits(node_budget=3))
