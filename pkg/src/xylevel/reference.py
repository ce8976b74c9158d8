"""Frozen reference data: the discriminant table, the verified pairing
functionals, and the fully worked q = 2 example matrices.

These are the values the acceptance suite reproduces exactly.
"""

# (q, a, b, disc) for y = T^2 + aT + b
DISCRIMINANT_TABLE = [
    (2, 1, 1, 4),
    (3, 0, 1, 80),
    (3, 1, 2, 68),
    (3, 2, 2, 68),
    (5, 1, 1, 265216),
    (5, 1, 2, 278800),
    (7, 0, 1, 7372800000),
    (7, 1, 4, 6567981056),
]

# (q, a, b, alpha) with alpha = [a_0, ..., a_{q-1}]
ALPHA_TABLE = [
    (3, 1, 2, (0, 1, 0)),
    (3, 2, 2, (0, 0, 1)),
    (5, 1, 2, (-1, 1, 4, 5, 2)),
    (5, 2, 3, (-1, -3, -6, -5, -2)),
    (5, 3, 3, (-1, -6, -3, -2, -5)),
    (5, 4, 2, (-1, 4, 1, 2, 5)),
    (7, 1, 6, (-8, 0, -6, -5, -8, -7, 5)),
    (7, 2, 3, (-8, -7, -7, 2, 3, -6, -6)),
    (7, 3, 5, (-5, -6, -6, -4, 2, 3, -5)),
    (7, 4, 5, (-8, -8, 0, -7, -6, 5, -5)),
    (7, 5, 3, (-5, -4, -5, -6, 3, -6, 2)),
    (7, 6, 6, (-5, -6, 2, -5, -6, -4, 3)),
]

# q = 2, y = T^2+T+1 worked pipeline
Q2_GEKELER = [[0, 0], [1, -2]]
Q2_B_TPRIME = [[2, 1, 2], [1, 2, 2], [2, 2, 1]]
Q2_B_TPRIME_MINUS_1 = [[0, 2, 1], [2, 0, 1], [1, 1, 1]]
Q2_GAMMA_MATRIX = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
Q2_BPRIME = [[-2, -1], [0, 0]]
Q2_CONJUGATOR = [[0, -1], [1, 0]]

# edge values of the three Eisenstein series, independent of q
EDGE_VALUES = {
    ("x", "a1"): lambda q: -1,
    ("x", "a4"): lambda q: -q,
    ("y", "a1"): lambda q: 0,
    ("y", "a4"): lambda q: -1,
    ("xy", "a1"): lambda q: -1,
    ("xy", "a4"): lambda q: -1,
}
