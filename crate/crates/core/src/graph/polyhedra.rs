//! Edge lists of the snub polyhedra, vertices labeled from 1.

pub(super) const SNUB_CUBE: [(usize, usize); 60] = [
    (1, 2), (1, 8), (1, 15), (1, 17), (1, 19), (2, 4), (2, 13), (2, 17), (2, 20), (3, 5), (3, 13),
    (3, 18), (3, 20), (3, 22), (4, 8), (4, 9), (4, 13), (4, 14), (5, 6), (5, 9), (5, 22), (5, 24),
    (6, 7), (6, 9), (6, 14), (6, 24), (7, 10), (7, 11), (7, 23), (7, 24), (8, 10), (8, 14), (8, 19),
    (9, 13), (9, 14), (10, 11), (10, 14), (10, 19), (11, 12), (11, 19), (11, 23), (12, 15), (12,
    16), (12, 21), (12, 23), (13, 20), (15, 16), (15, 17), (15, 19), (16, 17), (16, 18), (16, 21),
    (17, 20), (18, 20), (18, 21), (18, 22), (21, 22), (21, 23), (22, 24), (23, 24)
];

pub(super) const SNUB_DODECAHEDRON: [(usize, usize); 150] = [
    (1, 2), (1, 11), (1, 12), (1, 22), (1, 30), (2, 4), (2, 17), (2, 30), (2, 38), (3, 5), (3, 8),
    (3, 18), (3, 19), (3, 39), (4, 8), (4, 18), (4, 21), (4, 38), (5, 9), (5, 26), (5, 39), (5, 46),
    (6, 7), (6, 12), (6, 14), (6, 19), (6, 22), (7, 10), (7, 14), (7, 27), (7, 47), (8, 12), (8,
    18), (8, 19), (9, 14), (9, 27), (9, 29), (9, 46), (10, 15), (10, 35), (10, 36), (10, 47), (11,
    13), (11, 15), (11, 22), (11, 30), (12, 19), (12, 22), (13, 15), (13, 16), (13, 36), (13, 48),
    (14, 19), (14, 27), (15, 22), (15, 36), (16, 23), (16, 43), (16, 44), (16, 48), (17, 20), (17,
    23), (17, 30), (17, 38), (18, 21), (18, 39), (20, 23), (20, 24), (20, 44), (20, 54), (21, 25),
    (21, 31), (21, 38), (23, 30), (23, 44), (24, 31), (24, 50), (24, 51), (24, 54), (25, 31), (25,
    32), (25, 51), (25, 52), (26, 28), (26, 32), (26, 39), (26, 46), (27, 29), (27, 47), (28, 32),
    (28, 33), (28, 52), (28, 55), (29, 34), (29, 40), (29, 46), (31, 38), (31, 51), (32, 39), (32,
    52), (33, 40), (33, 55), (33, 56), (33, 57), (34, 40), (34, 41), (34, 57), (34, 58), (35, 36),
    (35, 37), (35, 41), (35, 47), (36, 48), (37, 41), (37, 42), (37, 58), (37, 60), (40, 46), (40,
    57), (41, 47), (41, 58), (42, 43), (42, 45), (42, 48), (42, 60), (43, 44), (43, 45), (43, 48),
    (44, 54), (45, 49), (45, 59), (45, 60), (49, 50), (49, 53), (49, 54), (49, 59), (50, 51), (50,
    53), (50, 54), (51, 52), (52, 55), (53, 55), (53, 56), (53, 59), (55, 56), (56, 57), (56, 59),
    (57, 58), (58, 60), (59, 60)
];
