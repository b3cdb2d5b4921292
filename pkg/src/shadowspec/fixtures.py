"""Explicit small antichains and graph edge sets used by the constructors for n <= 10."""

# Maximal antichains in B_5 on two consecutive levels, given by their upper-level sets.
N5_UPPER = {
    6: (3, [[1, 2, 3], [1, 4, 5]]),
    7: (4, [[1, 2, 3, 4]]),
    8: (3, [[1, 2, 3]]),
}

# Maximal antichains in B_6 of sizes 7..14, listed in full.
N6_FULL = {
    7: [[1, 2, 3], [1, 2, 4], [1, 2, 5], [3, 4], [3, 5], [4, 5], [6]],
    8: [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4], [5], [6]],
    9: [[1, 2, 5], [1, 2, 6], [3, 4, 5], [3, 4, 6], [5, 6], [1, 3], [1, 4], [2, 3], [2, 4]],
}

# Sizes 10..14 in B_6: a graph G of 2-sets plus every 3-set containing no edge of G.
N6_GRAPHS = {
    10: [[1, 2], [1, 3], [1, 4], [2, 5], [3, 6]],
    11: [[1, 2], [1, 3], [1, 4], [2, 5], [3, 5]],
    12: [[1, 2], [2, 3], [4, 5]],
    13: [[1, 2], [2, 3], [3, 4]],
    14: [[1, 2], [3, 4]],
}

# Triangle-free graphs keyed by (edges, adjacent edge pairs). The upper level of a
# flat antichain is formed by the complements in [l+2] of the edges.
EDGE_SETS = {
    (1, 0): [(1, 2)],
    (2, 1): [(1, 2), (1, 3)],
    (2, 0): [(1, 2), (3, 4)],
    (3, 3): [(1, 2), (1, 3), (1, 4)],
    (3, 2): [(1, 2), (2, 3), (3, 4)],
    (3, 1): [(1, 2), (1, 3), (4, 5)],
    (3, 0): [(1, 2), (3, 4), (5, 6)],
    (4, 4): [(1, 2), (1, 3), (1, 4), (2, 5)],
    (4, 3): [(1, 2), (1, 3), (1, 4), (5, 6)],
    (4, 2): [(1, 2), (2, 3), (3, 4), (5, 6)],
    (4, 1): [(1, 2), (1, 3), (4, 5), (6, 7)],
    (4, 0): [(1, 2), (3, 4), (5, 6), (7, 8)],
    (5, 4): [(1, 2), (1, 3), (1, 4), (2, 5), (6, 7)],
    (5, 3): [(1, 2), (1, 3), (1, 4), (5, 6), (7, 8)],
    (5, 2): [(1, 2), (2, 3), (3, 4), (5, 6), (7, 8)],
    (5, 1): [(1, 2), (1, 3), (4, 5), (6, 7), (8, 9)],
    # six edges, five adjacent pairs: a path on seven vertices
    (6, 5): [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
}

# Sizes of maximal antichains in B_9 obtained from EDGE_SETS, by pair of levels.
N9_TABLE = {
    (6, 5): {(1, 0): 121, (2, 0): 116, (2, 1): 117, (3, 0): 111, (3, 1): 112, (3, 2): 113,
             (3, 3): 114, (4, 0): 106, (4, 1): 107, (4, 2): 108, (4, 3): 109, (4, 4): 110,
             (5, 1): 102, (5, 2): 103, (5, 3): 104, (5, 4): 105, (6, 5): 101},
    (5, 4): {(1, 0): 122, (2, 0): 118, (2, 1): 119, (3, 0): 114, (3, 1): 115, (3, 2): 116,
             (3, 3): 117, (4, 0): 110, (4, 1): 111, (4, 2): 112, (4, 3): 113, (4, 4): 114,
             (5, 1): 107, (5, 2): 108, (5, 3): 109, (5, 4): 110, (6, 5): 107},
}

# Three 6-sets of [10] with pairwise disjoint shadows: 252 - 18 + 3 = 237.
N10_W = [[1, 2, 3, 4, 5, 6], [1, 2, 3, 4, 7, 8], [1, 2, 3, 4, 9, 10]]
