"""Frozen reference values shared across the test modules.

TABLE_15x15 and PARTITION_TABLE were produced by the independent
brute-force oracle before the closed-form solvers existed and are never
regenerated: the solvers must reproduce them cell for cell.
"""
from sgkit.bipartite import part_size_bound

# rows are m = 1..15 top to bottom, columns n = 1..15 left to right
TABLE_15x15 = [
    [2, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [2, 3, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [3, 3, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [4, 4, 4, 4, 4, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13],
    [5, 5, 5, 4, 5, 5, 5, 5, 5, 5, 6, 7, 8, 9, 10],
    [6, 6, 6, 4, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6],
    [7, 7, 7, 5, 5, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7],
    [8, 8, 8, 6, 5, 6, 7, 8, 8, 8, 8, 8, 8, 8, 8],
    [9, 9, 9, 7, 5, 6, 7, 8, 8, 8, 9, 9, 9, 9, 9],
    [10, 10, 10, 8, 5, 6, 7, 8, 8, 8, 9, 9, 9, 9, 10],
    [11, 11, 11, 9, 6, 6, 7, 8, 9, 9, 9, 9, 9, 9, 10],
    [12, 12, 12, 10, 7, 6, 7, 8, 9, 9, 9, 10, 10, 10, 10],
    [13, 13, 13, 11, 8, 6, 7, 8, 9, 9, 9, 10, 10, 10, 10],
    [14, 14, 14, 12, 9, 6, 7, 8, 9, 9, 9, 10, 10, 10, 10],
    [15, 15, 15, 13, 10, 6, 7, 8, 9, 10, 10, 10, 10, 10, 10],
]

# exact values for every complete multipartite graph on at most 7 vertices
PARTITION_TABLE = {
    (1,): 1,
    (2,): 2, (1, 1): 2,
    (3,): 3, (2, 1): 2, (1, 1, 1): 3,
    (4,): 4, (3, 1): 3, (2, 2): 3, (2, 1, 1): 3, (1, 1, 1, 1): 4,
    (5,): 5, (4, 1): 4, (3, 2): 3, (3, 1, 1): 3, (2, 2, 1): 4,
    (2, 1, 1, 1): 4, (1, 1, 1, 1, 1): 5,
    (6,): 6, (5, 1): 5, (4, 2): 4, (4, 1, 1): 4, (3, 3): 3, (3, 2, 1): 3,
    (3, 1, 1, 1): 3, (2, 2, 2): 4, (2, 2, 1, 1): 4, (2, 1, 1, 1, 1): 5,
    (1, 1, 1, 1, 1, 1): 6,
    (7,): 7, (6, 1): 6, (5, 2): 5, (5, 1, 1): 5, (4, 3): 4, (4, 2, 1): 4,
    (4, 1, 1, 1): 4, (3, 3, 1): 4, (3, 2, 2): 4, (3, 2, 1, 1): 4,
    (3, 1, 1, 1, 1): 4, (2, 2, 2, 1): 5, (2, 2, 1, 1, 1): 5,
    (2, 1, 1, 1, 1, 1): 6, (1, 1, 1, 1, 1, 1, 1): 7,
}


def optimal_split_cases(k):
    """Known-optimal (s1, s2) witnesses on the boundary structure of one
    level k >= 4, as tuples (case_id, n, m, s1, s2). Empty parameter
    ranges contribute nothing."""
    f = part_size_bound
    for n in range(1, 4):  # case 1: tiny n side, m pinned to the level
        yield 1, n, f(k, n), 0, k
    for n in range(3, k):  # case 2: n below the level, m on the curve
        yield 2, n, f(k, n), n, k - n
    for m in range(1, 4):  # case 3: mirror of case 1
        yield 3, f(k, m), m, k, 0
    for m in range(3, k):  # case 4: mirror of case 2
        yield 4, f(k, m), m, k - m, m
    for i in range(4, k - 3):  # case 5: interior rectangles
        for m in range(f(k, i - 1) + 1, f(k, i) + 1):
            for n in range(f(k, k - i - 1) + 1, f(k, k - i) + 1):
                yield 5, n, m, i, k - i
    for i in range(0, k + 1):  # cases 6-8: n pinned to a rectangle edge
        n = f(k, k - i - 1)
        for m in range(f(k, i - 1) + 1, f(k, i) + 1):
            if i <= k - 3:
                yield 6, n, m, i, k - i
            if i <= k - 4:
                yield 7, n, m, i + 1, k - i - 1
            if i >= k - 4:
                yield 8, n, m, k, 0
    for i in range(0, k + 1):  # cases 9-11: m pinned to a rectangle edge
        m = f(k, i - 1)
        for n in range(f(k, k - i - 1) + 1, f(k, k - i) + 1):
            if i >= 3:
                yield 9, n, m, i, k - i
            if i >= 4:
                yield 10, n, m, i - 1, k - i + 1
            if i <= 4:
                yield 11, n, m, 0, k
    for i in range(0, k + 1):  # cases 12-16: both coordinates pinned
        n, m = f(k, k - i - 1), f(k, i - 1)
        if i <= 4:
            yield 12, n, m, 0, k
        if 2 <= i <= k - 4:
            yield 13, n, m, i + 1, k - i - 1
        if 3 <= i <= k - 3:
            yield 14, n, m, i, k - i
        if 4 <= i <= k - 2:
            yield 15, n, m, i - 1, k - i + 1
        if i >= k - 4:
            yield 16, n, m, k, 0
