"""Published reference values, used only to report deltas against computed results."""

from __future__ import annotations

from collections import namedtuple

Table1Row = namedtuple("Table1Row", "v k cyclic searched pct_ub")
Table2Row = namedtuple("Table2Row", "v k a_abd e_con searched pct_ub")

# v, k, cyclic E_con, computer-generated E_con, % of refined upper bound
TABLE1 = [
    Table1Row(10, 3, 0.6998, 0.705895, 99.41),
    Table1Row(11, 3, 0.6762, 0.690163, 99.13),
    Table1Row(12, 3, 0.6726, 0.680062, 99.30),
    Table1Row(13, 3, 0.6667, 0.669481, 99.14),
    Table1Row(14, 3, 0.6527, 0.663024, 99.36),
    Table1Row(15, 3, 0.6409, 0.660377, 100.00),
    Table1Row(16, 3, 0.6321, 0.647969, 99.32),
    Table1Row(17, 3, 0.6222, 0.643898, 99.78),
    Table1Row(18, 3, 0.6116, 0.637262, 99.73),
    Table1Row(19, 3, 0.6111, 0.631561, 99.72),
    Table1Row(20, 3, 0.6011, 0.627431, 99.87),
    Table1Row(14, 4, 0.8029, 0.802941, 100.00),
    Table1Row(15, 4, 0.7955, 0.795455, 100.00),
    Table1Row(16, 4, 0.7872, 0.789474, 100.00),
    Table1Row(17, 4, 0.7803, 0.782335, 99.84),
    Table1Row(18, 4, 0.7762, 0.777101, 99.83),
    Table1Row(19, 4, 0.7725, 0.7725, 99.84),
    Table1Row(20, 4, 0.7686, 0.768571, 99.87),
    Table1Row(21, 4, 0.7624, 0.765069, 99.90),
    Table1Row(22, 4, 0.7599, 0.761053, 99.83),
    Table1Row(23, 4, 0.7552, 0.758038, 99.84),
    Table1Row(24, 4, 0.7533, 0.754688, 99.77),
    Table1Row(25, 4, 0.749, 0.751914, 99.75),
    Table1Row(26, 4, 0.7454, 0.749165, 99.71),
]

# v, k, A_abd of the non-cyclic design, its E_con, computer-generated E_con, % UB
TABLE2 = [
    Table2Row(9, 3, 0.9167, 0.7273, 0.727273, 100.00),
    Table2Row(10, 3, 0.95, 0.7018, 0.705895, 99.41),
    Table2Row(12, 3, 0.9803, 0.6801, 0.680062, 99.30),
    Table2Row(16, 4, 0.6333, 0.7895, 0.789474, 100.00),
    Table2Row(25, 5, 0.4833, 0.8276, 0.827586, 100.00),
]

TABLE1_BY_VK = {(r.v, r.k): r for r in TABLE1}

# The 3 x 5 worked example; rows are the checks A, B, C.
EXAMPLE1_ROWS = [
    [2, 4, 5, 1, 3],
    [5, 3, 2, 4, 1],
    [1, 2, 3, 5, 4],
]

# Check placement produced from EXAMPLE1_ROWS, 1 = A, 2 = B, 3 = C, 0 = blank.
EXAMPLE1_GRID = [
    [3, 0, 0, 1, 2],
    [1, 3, 2, 0, 0],
    [0, 2, 3, 0, 1],
    [0, 1, 0, 2, 3],
    [2, 0, 1, 3, 0],
]

# v = 12, k = 3 optimal contraction: E_con and the resulting A_test
EXAMPLE2 = {"v": 12, "k": 3, "e_con": 0.68006, "a_test": 4.0075}
