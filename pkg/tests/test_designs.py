import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from augdesign import (
    BadDimensions,
    Contraction,
    DuplicateInColumn,
    InvalidDesign,
    RowNotPermutation,
    incidence,
    validate_contraction,
)
from augdesign.designs import (
    AugmentedDesign,
    EfficiencyReport,
    columns_from_incidence,
    contraction_from_json,
    contraction_to_json,
)

from conftest import random_contraction


def test_example1_is_valid(example1):
    assert validate_contraction(example1) is example1
    assert (example1.v, example1.k) == (5, 3)


def test_cyclic_shift_rows_valid():
    c = Contraction(4, 2, [[1, 2, 3, 4], [2, 3, 4, 1]])
    assert validate_contraction(c) is c


def test_duplicate_in_first_column():
    with pytest.raises(DuplicateInColumn) as exc:
        Contraction(4, 2, [[1, 2, 3, 4], [1, 3, 4, 2]])
    assert exc.value.column == 1


def test_row_not_permutation():
    with pytest.raises(RowNotPermutation) as exc:
        Contraction(4, 2, [[1, 2, 3, 4], [2, 2, 4, 1]])
    assert exc.value.row == 2


@pytest.mark.parametrize("v,k", [(3, 1), (4, 1), (4, 3), (5, 4), (3, 2)])
def test_bad_dimensions(v, k):
    rows = [list(range(1, v + 1))] * max(k, 1)
    with pytest.raises(BadDimensions):
        Contraction(v, k, rows)


def test_shape_mismatch():
    with pytest.raises(BadDimensions):
        Contraction(5, 2, [[1, 2, 3, 4], [2, 3, 4, 1]])


def test_validate_raw_mapping():
    c = validate_contraction({"v": 4, "k": 2, "rows": [[1, 2, 3, 4], [2, 3, 4, 1]]})
    assert isinstance(c, Contraction)


def _brute_valid(rows, v):
    rows_ok = all(sorted(r) == list(range(1, v + 1)) for r in rows)
    cols_ok = all(len({r[j] for r in rows}) == len(rows) for j in range(v))
    return rows_ok, cols_ok


@settings(max_examples=200, deadline=None)
@given(data=st.data(), v=st.integers(4, 8))
def test_validation_matches_brute_force(data, v):
    k = data.draw(st.integers(2, v - 2))
    perm = st.permutations(list(range(1, v + 1)))
    rows = [data.draw(perm) for _ in range(k)]
    if data.draw(st.booleans()):
        # corrupt one cell so the row stops being a permutation
        i, j = data.draw(st.integers(0, k - 1)), data.draw(st.integers(0, v - 1))
        rows[i][j] = data.draw(st.integers(1, v))
    rows_ok, cols_ok = _brute_valid(rows, v)
    if rows_ok and cols_ok:
        assert validate_contraction(Contraction(v, k, rows)).v == v
    else:
        with pytest.raises(RowNotPermutation if not rows_ok else DuplicateInColumn):
            Contraction(v, k, rows)


def test_incidence_example1_column1(example1):
    n = incidence(example1)
    assert np.flatnonzero(n[:, 0]).tolist() == [0, 1, 4]


def test_incidence_cyclic_is_circulant():
    n = incidence(Contraction(4, 2, [[1, 2, 3, 4], [2, 3, 4, 1]]))
    assert np.flatnonzero(n[:, 0]).tolist() == [0, 1]
    for j in range(4):
        assert np.array_equal(n[:, j], np.roll(n[:, 0], j))


@pytest.mark.parametrize("seed", range(100))
def test_incidence_reconstructs_columns(seed):
    rng = np.random.default_rng(seed)
    v = int(rng.integers(4, 13))
    k = int(rng.integers(2, v - 1))
    c = random_contraction(v, k, seed)
    n = incidence(c)
    assert n.sum() == v * k
    assert np.all(n.sum(axis=0) == k) and np.all(n.sum(axis=1) == k)
    assert columns_from_incidence(n) == c.column_sets()


def test_json_round_trip(example1):
    assert contraction_from_json(contraction_to_json(example1)) == example1


@pytest.mark.parametrize(
    "payload",
    [
        {"v": 4, "k": 2, "rows": [[1, 2, 3, 4], [2, 3, 4, 1]], "extra": 1},
        {"v": 4, "rows": [[1, 2, 3, 4], [2, 3, 4, 1]]},
        {"v": 4.0, "k": 2, "rows": [[1, 2, 3, 4], [2, 3, 4, 1]]},
        {"v": 4, "k": 2, "rows": [[1, 2, 3, 4], [2, 3, 4, "1"]]},
        [1, 2, 3],
    ],
)
def test_json_rejects_malformed(payload):
    with pytest.raises(InvalidDesign):
        contraction_from_json(json.dumps(payload))


def test_json_rejects_garbage():
    with pytest.raises(InvalidDesign):
        contraction_from_json("{not json")


def test_augmented_design_rejects_double_check_in_row():
    grid = np.zeros((4, 4), dtype=int)
    grid[0, 0] = grid[0, 1] = -1
    with pytest.raises(InvalidDesign):
        AugmentedDesign(4, 2, grid)


def test_augmented_design_counts():
    from augdesign import augment

    d = augment(Contraction(4, 2, [[1, 2, 3, 4], [2, 3, 4, 1]]))
    assert d.v_star == 16 - 2 * 3
    assert d.n_blanks == d.n_entries == 8
    assert np.all(d.q.sum(axis=0) == 2) and np.all(d.q.sum(axis=1) == 2)
    r = d.replication()
    assert r.tolist() == [1.0] * 8 + [4.0, 4.0]


def test_efficiency_report_bounds():
    rep = EfficiencyReport.from_cefs([0.5, 1.0])
    assert rep.e == pytest.approx(2 / 3)
    assert rep.ub_trivial == pytest.approx(0.75)
    assert rep.e <= rep.ub_trivial
    with pytest.raises(InvalidDesign):
        EfficiencyReport.from_cefs([0.0, 1.0])
