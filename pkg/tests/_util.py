"""Small generators used by several test modules."""
import random

from sgkit.graphs import Graph, connected_components
from sgkit.reduction import two_coloring


def all_partitions(n, largest=None):
    """Integer partitions of n in nonincreasing order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def connected_bipartite_graphs(n):
    """Every connected bipartite graph on vertex set 0..n-1 (all labelings)."""
    from itertools import combinations

    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        g = Graph.from_edges(n, edges)
        if len(connected_components(g)) != 1:
            continue
        try:
            two_coloring(g)
        except ValueError:
            continue
        yield g


def random_connected_bipartite(n, rng: random.Random) -> Graph:
    while True:
        x_size = rng.randint(1, n - 1)
        xs = set(rng.sample(range(n), x_size))
        ys = sorted(set(range(n)) - xs)
        possible = [(x, y) for x in sorted(xs) for y in ys]
        edges = rng.sample(possible, rng.randint(min(n - 1, len(possible)), len(possible)))
        g = Graph.from_edges(n, edges)
        if len(connected_components(g)) == 1:
            return g


def random_partition_parts(rng: random.Random, n_max=40, r_max=22):
    """Random partition with at most r_max parts (oversized draws rejected)."""
    while True:
        n = rng.randint(1, n_max)
        left, parts = n, []
        while left > 0:
            c = rng.randint(1, left)
            parts.append(c)
            left -= c
        if len(parts) <= r_max:
            return tuple(sorted(parts, reverse=True))
