"""Frozen reference fixtures for the three emitted tables.

These values were transcribed once as structured data and are never
regenerated: the self-check and the acceptance tests compare the live
table emitters against them, so the two routes stay independent.

DECOMPOSITIONS entries are (lam, j, d, r, terms) with terms a tuple of
(multiplicity, mu) pairs in descending lexicographic order of mu.
COUNTS_ODD / COUNTS_EVEN map k to (d, row of partition counts).
"""

DECOMPOSITIONS = (
    ((3,), 0, 4, 3, ((1, (4,)),)),
    ((3,), 1, 3, 3, ((1, (3,)),)),
    ((2, 1), 0, 5, 3, ((1, (3, 2)),)),
    ((2, 1), 1, 4, 3, ((2, (2, 2)),)),
    ((4,), 0, 5, 4, ((1, (5,)),)),
    ((4,), 1, 4, 4, ((1, (4,)),)),
    ((3, 1), 0, 6, 4, ((1, (4, 2)),)),
    ((3, 1), 1, 5, 4, ((1, (3, 2)),)),
    ((2, 2), 0, 6, 4, ((1, (3, 3)),)),
    ((2, 2), 1, 5, 4, ((1, (3, 2)),)),
    ((2, 2), 2, 4, 4, ((1, (2, 2)),)),
    ((2, 1, 1), 0, 7, 4, ((1, (3, 2, 2)),)),
    ((2, 1, 1), 1, 6, 4, ((3, (2, 2, 2)),)),
    ((5,), 0, 6, 5, ((1, (6,)),)),
    ((5,), 1, 5, 5, ((1, (5,)),)),
    ((4, 1), 0, 7, 5, ((1, (5, 2)),)),
    ((4, 1), 1, 6, 5, ((1, (4, 2)),)),
    ((3, 2), 0, 7, 5, ((1, (4, 3)),)),
    ((3, 2), 1, 6, 5, ((1, (4, 2)), (2, (3, 3)))),
    ((3, 2), 2, 5, 5, ((1, (3, 2)),)),
    ((3, 1, 1), 0, 8, 5, ((1, (4, 2, 2)),)),
    ((3, 1, 1), 1, 7, 5, ((1, (3, 2, 2)),)),
    ((2, 2, 1), 0, 8, 5, ((1, (3, 3, 2)),)),
    ((2, 2, 1), 1, 7, 5, ((2, (3, 2, 2)),)),
    ((2, 2, 1), 2, 6, 5, ((3, (2, 2, 2)),)),
    ((2, 1, 1, 1), 0, 9, 5, ((1, (3, 2, 2, 2)),)),
    ((2, 1, 1, 1), 1, 8, 5, ((4, (2, 2, 2, 2)),)),
    ((6,), 0, 7, 6, ((1, (7,)),)),
    ((6,), 1, 6, 6, ((1, (6,)),)),
    ((5, 1), 0, 8, 6, ((1, (6, 2)),)),
    ((5, 1), 1, 7, 6, ((1, (5, 2)),)),
    ((4, 2), 0, 8, 6, ((1, (5, 3)),)),
    ((4, 2), 1, 7, 6, ((1, (5, 2)), (1, (4, 3)))),
    ((4, 2), 2, 6, 6, ((1, (4, 2)),)),
    ((4, 1, 1), 0, 9, 6, ((1, (5, 2, 2)),)),
    ((4, 1, 1), 1, 8, 6, ((1, (4, 2, 2)),)),
    ((3, 3), 0, 8, 6, ((1, (4, 4)),)),
    ((3, 3), 1, 7, 6, ((1, (4, 3)),)),
    ((3, 3), 2, 6, 6, ((1, (3, 3)),)),
    ((3, 2, 1), 0, 9, 6, ((1, (4, 3, 2)),)),
    ((3, 2, 1), 1, 8, 6, ((2, (4, 2, 2)), (2, (3, 3, 2)))),
    ((3, 2, 1), 2, 7, 6, ((2, (3, 2, 2)),)),
    ((3, 1, 1, 1), 0, 10, 6, ((1, (4, 2, 2, 2)),)),
    ((3, 1, 1, 1), 1, 9, 6, ((1, (3, 2, 2, 2)),)),
    ((2, 2, 2), 0, 9, 6, ((1, (3, 3, 3)),)),
    ((2, 2, 2), 1, 8, 6, ((1, (3, 3, 2)),)),
    ((2, 2, 2), 2, 7, 6, ((1, (3, 2, 2)),)),
    ((2, 2, 2), 3, 6, 6, ((1, (2, 2, 2)),)),
    ((2, 2, 1, 1), 0, 10, 6, ((1, (3, 3, 2, 2)),)),
    ((2, 2, 1, 1), 1, 9, 6, ((3, (3, 2, 2, 2)),)),
    ((2, 2, 1, 1), 2, 8, 6, ((6, (2, 2, 2, 2)),)),
    ((2, 1, 1, 1, 1), 0, 11, 6, ((1, (3, 2, 2, 2, 2)),)),
    ((2, 1, 1, 1, 1), 1, 10, 6, ((5, (2, 2, 2, 2, 2)),)),
    ((7,), 0, 8, 7, ((1, (8,)),)),
    ((7,), 1, 7, 7, ((1, (7,)),)),
    ((6, 1), 0, 9, 7, ((1, (7, 2)),)),
    ((6, 1), 1, 8, 7, ((1, (6, 2)),)),
    ((5, 2), 0, 9, 7, ((1, (6, 3)),)),
    ((5, 2), 1, 8, 7, ((1, (6, 2)), (1, (5, 3)))),
    ((5, 2), 2, 7, 7, ((1, (5, 2)),)),
    ((5, 1, 1), 0, 10, 7, ((1, (6, 2, 2)),)),
    ((5, 1, 1), 1, 9, 7, ((1, (5, 2, 2)),)),
    ((4, 3), 0, 9, 7, ((1, (5, 4)),)),
    ((4, 3), 1, 8, 7, ((1, (5, 3)), (2, (4, 4)))),
    ((4, 3), 2, 7, 7, ((1, (4, 3)),)),
    ((4, 2, 1), 0, 10, 7, ((1, (5, 3, 2)),)),
    ((4, 2, 1), 1, 9, 7, ((2, (5, 2, 2)), (1, (4, 3, 2)))),
    ((4, 2, 1), 2, 8, 7, ((2, (4, 2, 2)),)),
    ((4, 1, 1, 1), 0, 11, 7, ((1, (5, 2, 2, 2)),)),
    ((4, 1, 1, 1), 1, 10, 7, ((1, (4, 2, 2, 2)),)),
    ((3, 3, 1), 0, 10, 7, ((1, (4, 4, 2)),)),
    ((3, 3, 1), 1, 9, 7, ((1, (4, 3, 2)),)),
    ((3, 3, 1), 2, 8, 7, ((1, (3, 3, 2)),)),
    ((3, 2, 2), 0, 10, 7, ((1, (4, 3, 3)),)),
    ((3, 2, 2), 1, 9, 7, ((1, (4, 3, 2)), (3, (3, 3, 3)))),
    ((3, 2, 2), 2, 8, 7, ((1, (4, 2, 2)), (2, (3, 3, 2)))),
    ((3, 2, 2), 3, 7, 7, ((1, (3, 2, 2)),)),
    ((3, 2, 1, 1), 0, 11, 7, ((1, (4, 3, 2, 2)),)),
    ((3, 2, 1, 1), 1, 10, 7, ((3, (4, 2, 2, 2)), (2, (3, 3, 2, 2)))),
    ((3, 2, 1, 1), 2, 9, 7, ((3, (3, 2, 2, 2)),)),
    ((3, 1, 1, 1, 1), 0, 12, 7, ((1, (4, 2, 2, 2, 2)),)),
    ((3, 1, 1, 1, 1), 1, 11, 7, ((1, (3, 2, 2, 2, 2)),)),
    ((2, 2, 2, 1), 0, 11, 7, ((1, (3, 3, 3, 2)),)),
    ((2, 2, 2, 1), 1, 10, 7, ((2, (3, 3, 2, 2)),)),
    ((2, 2, 2, 1), 2, 9, 7, ((3, (3, 2, 2, 2)),)),
    ((2, 2, 2, 1), 3, 8, 7, ((4, (2, 2, 2, 2)),)),
    ((2, 2, 1, 1, 1), 0, 12, 7, ((1, (3, 3, 2, 2, 2)),)),
    ((2, 2, 1, 1, 1), 1, 11, 7, ((4, (3, 2, 2, 2, 2)),)),
    ((2, 2, 1, 1, 1), 2, 10, 7, ((10, (2, 2, 2, 2, 2)),)),
    ((2, 1, 1, 1, 1, 1), 0, 13, 7, ((1, (3, 2, 2, 2, 2, 2)),)),
    ((2, 1, 1, 1, 1, 1), 1, 12, 7, ((6, (2, 2, 2, 2, 2, 2)),)),
)

COUNTS_ODD = {
    3: (5, (1, 1)),
    4: (7, (1, 2, 1)),
    5: (9, (1, 3, 3, 1)),
    6: (11, (1, 3, 5, 4, 1)),
    7: (13, (1, 3, 6, 8, 5, 1)),
    8: (15, (1, 3, 7, 11, 12, 6, 1)),
    9: (17, (1, 3, 7, 13, 18, 16, 7, 1)),
    10: (19, (1, 3, 7, 14, 23, 27, 21, 8, 1)),
    11: (21, (1, 3, 7, 15, 26, 37, 39, 27, 9, 1)),
    12: (23, (1, 3, 7, 15, 28, 44, 57, 54, 33, 10, 1)),
    13: (25, (1, 3, 7, 15, 29, 49, 71, 84, 72, 40, 11, 1)),
}

COUNTS_EVEN = {
    3: (6, (1, 2, 1)),
    4: (8, (1, 2, 3, 1)),
    5: (10, (1, 2, 4, 4, 1)),
    6: (12, (1, 2, 5, 7, 5, 1)),
    7: (14, (1, 2, 5, 9, 10, 6, 1)),
    8: (16, (1, 2, 5, 10, 15, 14, 7, 1)),
    9: (18, (1, 2, 5, 11, 18, 23, 19, 8, 1)),
    10: (20, (1, 2, 5, 11, 20, 30, 34, 24, 9, 1)),
    11: (22, (1, 2, 5, 11, 21, 35, 47, 47, 30, 10, 1)),
    12: (24, (1, 2, 5, 11, 22, 38, 58, 70, 64, 37, 11, 1)),
    13: (26, (1, 2, 5, 11, 22, 40, 65, 90, 101, 84, 44, 12, 1)),
}
