"""Known values used by ``toricrep verify`` and the acceptance tests."""
from __future__ import annotations

from .tableaux import DoublePartition as DP

BETTI = {
    "G2": (1, 9, 0),
    "F4": (1, 57, 264, 0, 0),
    "E6": (1, 36, 1323, 4392, 0, 0, 0),
}

# Sizes of the nonzero orbits of W on the row space.
ORBIT_SIZES = {
    "G2": (3,),
    "F4": (3, 12),
    "E6": (27, 36),
    "E7": (1, 63, 63),
    "E8": (120, 135),
}

# Reduced Betti numbers of K_S per orbit, keyed by orbit size.
ORBIT_BETTI = {
    "G2": {3: {0: 3}},
    "F4": {3: {0: 15}, 12: {0: 1, 1: 22}},
    "E6": {27: {1: 49}, 36: {0: 1, 2: 122}},
}

H_POLYNOMIAL = {
    "G2": (1, 10, 1),
    "F4": (1, 236, 678, 236, 1),
    "E6": (1, 1272, 12183, 24928, 12183, 1272, 1),
    "E7": (1, 17635, 309969, 1123915, 1123915, 309969, 17635, 1),
    "E8": (1, 881752, 28336348, 169022824, 300247750, 169022824, 28336348, 881752, 1),
}

EULER = {"G2": -8, "F4": 208, "E6": -3104, "E7": 0, "E8": 17111296}

TYPE_A = {
    (5, 3): {(3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1},
    (5, 2): {(4, 2): 1, (4, 1, 1): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1},
}
TYPE_A_DIM = {(5, 3): 61, (5, 2): 75}

TYPE_B = {
    (3, 2): {
        DP((1,), (1, 1)): 1,
        DP((2,), (1,)): 1,
        DP((1, 1), (1,)): 1,
        DP((2, 1), ()): 1,
    },
    (3, 1): {
        DP((), (2, 1)): 1,
        DP((), (1, 1, 1)): 1,
        DP((1,), (2,)): 2,
        DP((1,), (1, 1)): 1,
    },
}
TYPE_B_DIM = {(3, 2): 11, (3, 1): 12}

TORUS_COMPLEX = {"n_vertices": 4, "facets": [[0, 1], [1, 2], [2, 3], [0, 3]]}
TORUS_LAMBDA_1 = ("1011", "0101")
TORUS_LAMBDA_2 = ("1010", "0101")
TORUS_GROUP = {"degree": 4, "generators": [[1, 2, 3, 0]]}
TORUS_BETTI = (1, 2, 1)

NESTOHEDRON_CASES = ((3, 1), (3, 2), (5, 1), (5, 2))
