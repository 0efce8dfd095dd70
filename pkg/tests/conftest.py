from pathlib import Path

import numpy as np
import pytest

from augdesign import Contraction, load_contraction

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES = []


def random_contraction(v, k, seed, moves=None):
    """Random k x v Latin rectangle: shuffled cyclic start, then random valid row swaps."""
    rng = np.random.default_rng(seed)
    perm = rng.permutation(v) + 1
    shifts = rng.choice(v, size=k, replace=False)
    rows = np.array([[perm[(j + s) % v] for j in range(v)] for s in shifts])
    rows = rows[:, rng.permutation(v)]
    for _ in range(moves if moves is not None else 10 * v * k):
        i = rng.integers(k)
        j1, j2 = rng.choice(v, size=2, replace=False)
        a, b = rows[i, j1], rows[i, j2]
        if b in np.delete(rows[:, j1], i) or a in np.delete(rows[:, j2], i):
            continue
        rows[i, j1], rows[i, j2] = b, a
    return Contraction(v, k, rows)


def pseudo_inverse_e(c):
    """E_con by an eigen-free route: sum of 1/cef = trace(pinv(A*))."""
    n = np.zeros((c.v, c.v))
    for j in range(c.v):
        n[c.rows[:, j] - 1, j] = 1
    a_star = np.eye(c.v) - n @ n.T / c.k**2
    rank = np.linalg.matrix_rank(a_star, tol=1e-8)
    if rank < c.v - 1:
        return None
    # A* + J/v is nonsingular for a connected design; its inverse trace adds exactly 1
    tr = np.trace(np.linalg.inv(a_star + np.ones((c.v, c.v)) / c.v)) - 1.0
    return (c.v - 1) / tr


@pytest.fixture
def example1():
    return load_contraction(DATA / "example1.json")


@pytest.fixture
def optimal_12_3():
    return load_contraction(DATA / "v12_k3_optimal.json")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
