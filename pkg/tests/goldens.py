"""Reference generator images, as functions of d (rows are images' coordinates)."""

import math

R3 = math.sqrt(3) / 2

N3 = {
    (1,): {
        "e": lambda d: [[1, 0], [0, 1]],
        "(1 2)": lambda d: [[0, 1], [1, 0]],
        "(2 3)'": lambda d: [[0, 0], [1, d]],
    }
}

N4 = {
    (2,): {
        "e": lambda d: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "(1 2)": lambda d: [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        "(2 3)": lambda d: [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
        "(3 4)'": lambda d: [[0, 0, 0], [0, 0, 0], [1, 1, d]],
    },
    (1, 1): {
        "e": lambda d: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "(1 2)": lambda d: [[0, -1, 0], [-1, 0, 0], [0, 0, -1]],
        "(2 3)": lambda d: [[-1, 0, 0], [0, 0, 1], [0, 1, 0]],
        "(3 4)'": lambda d: [[0, 0, 0], [0, 0, 0], [1, 1, d]],
    },
}

# For α = (2,1) the reference 4x4 matrices are the principal submatrices on
# the (leg, tableau) pairs (1,1), (2,2), (3,1), (4,2) of the 8x8 images.
N5_SLICE = {(2, 1): [0, 3, 4, 7]}

N5 = {
    (3,): {
        "e": lambda d: [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        "(1 2)": lambda d: [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        "(2 3)": lambda d: [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
        "(3 4)": lambda d: [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        "(4 5)'": lambda d: [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, 1, 1, d]],
    },
    (2, 1): {
        "e": lambda d: [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        "(1 2)": lambda d: [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
        "(2 3)": lambda d: [[-0.5, 0, 0, 0], [0, 0, R3, 0], [0, R3, 0, 0], [0, 0, 0, 0.5]],
        "(3 4)": lambda d: [[-0.5, 0, 0, 0], [0, 0.5, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        "(4 5)'": lambda d: [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, d]],
    },
    (1, 1, 1): {
        "e": lambda d: [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        "(1 2)": lambda d: [[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
        "(2 3)": lambda d: [[-1, 0, 0, 0], [0, 0, -1, 0], [0, -1, 0, 0], [0, 0, 0, -1]],
        "(3 4)": lambda d: [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        "(4 5)'": lambda d: [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, 1, 1, d]],
    },
}

GOLDENS = {3: N3, 4: N4, 5: N5}

# Reduced n=4, d=2, α=(1,1) reference images: row-image layout in a basis whose
# first vector carries the opposite sign. Convert ours with (S M S).T, S = diag(-1, 1).
REDUCED_N4 = {
    "(34)": [[1, -1], [-1, 1]],
    "(12)": [[0, 1], [1, 0]],
    "(14)": [[2, 0], [1, 0]],
    "(4321)": [[-2, 2], [-1, 1]],
    "(13)": [[1, -1], [0, -1]],
}
REDUCED_N4_GAUGE = [-1, 1]
