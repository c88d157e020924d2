"""Exact solvers, bounds, and verification tools for the strong geodetic
number of complete multipartite graphs, plus brute-force oracles for
arbitrary small graphs and the domination-to-strong-geodetic reduction."""

from .bipartite import (
    BipartiteSolution,
    ConjectureSample,
    ConjectureScan,
    RegimeCase,
    RegimeSpec,
    RootPair,
    asymptotic_estimate,
    classify_sg_eq_k,
    conjecture_sample,
    conjecture_samples,
    conjecture_scan,
    inv_binom_ceil,
    level_set,
    part_size_bound,
    quartic_roots,
    sg_balanced,
    sg_bipartite,
    sg_large_m,
)
from .graphs import (
    Certificate,
    DisconnectedPairError,
    GeodesicCapError,
    Graph,
    GraphFormatError,
    Partition,
    build_complete_multipartite,
    connected_components,
    enumerate_geodesics,
    parse_graph,
    serialize_graph,
    simplicial_vertices,
    verify_certificate,
)
from .multipartite import (
    MultipartiteBounds,
    TooManyPartsError,
    bounds_report,
    coverage_feasible,
    coverage_feasible_matching,
    lp_lower_bound,
    selection_certificate,
    sg_multipartite,
    sg_uniform,
    whole_parts_upper_bound,
)
from .oracle import (
    BudgetExceededError,
    OracleLimits,
    dominating_number_exact,
    is_strong_geodetic_set,
    minimum_dominating_set,
    strong_geodetic_number_exact,
)
from .reduction import (
    ReductionInstance,
    build_reduction,
    forward_certificate,
    two_coloring,
    verify_equivalence,
)

__version__ = "0.1.0"
