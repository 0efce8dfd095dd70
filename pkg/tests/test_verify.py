import json

import numpy as np
import pytest

from augdesign import (
    Contraction,
    augment,
    contraction_cefs,
    cyclic_contraction,
    fill_entries,
    verify_formula,
    verify_spectrum,
)
from augdesign.errors import Disconnected, MismatchedPair
from augdesign.formulas import a_test
from augdesign.verify import b_matrix, paired_cefs, write_report

from conftest import random_contraction


def test_formula_cyclic_5_3():
    c = cyclic_contraction(5, {1, 2, 3})
    for seed in (0, 1, 12345):
        rep = verify_formula(c, seed)
        assert rep.passed
        assert round(rep.e_direct, 6) == round(rep.e_formula, 6) == 0.589286


def test_formula_example2(optimal_12_3):
    rep = verify_formula(optimal_12_3, 7)
    assert rep.passed
    assert round(a_test(rep.details["e_test_formula"]), 4) == 4.0075
    assert round(a_test(rep.details["e_test_direct"]), 4) == 4.0075


def test_formula_disconnected():
    with pytest.raises(Disconnected):
        verify_formula(cyclic_contraction(4, {1, 3}))


def test_spectrum_cyclic_5_3():
    c = cyclic_contraction(5, {1, 2, 3})
    rep = verify_spectrum(c, fill_entries(augment(c), 0))
    assert rep.passed
    assert rep.details["unit_cefs"] == 4
    th = contraction_cefs(c).cefs
    assert paired_cefs([th[0]], 5, 3) == pytest.approx([0.276393, 0.923607], abs=1e-6)
    assert paired_cefs([th[-1]], 5, 3) == pytest.approx([0.476393, 0.723607], abs=1e-6)


def test_pair_degenerates_at_theta_one():
    assert paired_cefs([1.0], 7, 3) == pytest.approx([3 / 7, 3 / 7])


def test_spectrum_example1(example1):
    rep = verify_spectrum(example1, fill_entries(augment(example1), 2))
    assert rep.passed
    assert rep.details["minus_n_equals_incidence"]
    assert rep.details["q_row_col_sums_ok"]


def test_b_matrix_spectrum(example1):
    d = augment(example1)
    b = b_matrix(d.q)
    assert b.shape == (10, 10)
    w = np.linalg.eigvalsh(b)
    assert w[0] == pytest.approx(0, abs=1e-12)
    assert w[-1] == pytest.approx(2 * 3 / 5)


def test_mismatched_pair(example1):
    other = cyclic_contraction(5, {1, 2, 3})
    with pytest.raises(MismatchedPair):
        verify_spectrum(other, fill_entries(augment(example1), 0))
    # same column sets, different check labels
    swapped = Contraction(5, 3, example1.rows[[1, 0, 2]])
    with pytest.raises(MismatchedPair):
        verify_spectrum(swapped, fill_entries(augment(example1), 0))
    with pytest.raises(MismatchedPair):
        verify_spectrum(cyclic_contraction(6, {1, 2, 3}), fill_entries(augment(example1), 0))


@pytest.mark.parametrize("case", range(25))
def test_campaign(case):
    rng = np.random.default_rng(1000 + case)
    v = int(rng.integers(5, 13))
    k = int(rng.integers(2, min(4, v - 2) + 1))
    c = random_contraction(v, k, case)
    try:
        contraction_cefs(c)
    except Disconnected:
        return
    seed = int(rng.integers(0, 2**63))
    f = verify_formula(c, seed)
    s = verify_spectrum(c, fill_entries(augment(c), seed))
    assert f.passed and s.passed
    assert s.details["unit_cefs"] == s.details["unit_cefs_expected"]


def test_report_serializes(tmp_path):
    c = cyclic_contraction(6, {1, 2, 4})
    reports = [verify_formula(c, 1), verify_spectrum(c, fill_entries(augment(c), 1))]
    out = tmp_path / "r.json"
    write_report(reports, out)
    data = json.loads(out.read_text())
    assert data["passed"] is True
    assert [r["kind"] for r in data["reports"]] == ["formula", "spectrum"]


def test_singular_value_route_matches_theta_route(example1):
    from augdesign.verify import contraction_pairs

    pairs = contraction_pairs(example1)
    via_theta = paired_cefs(contraction_cefs(example1).cefs, 5, 3)
    # the theta route loses precision through sqrt(1 - theta); agreement is ~sqrt(eps)
    assert pairs == pytest.approx(via_theta, abs=1e-7)
    assert len(pairs) == 2 * (5 - 1)
