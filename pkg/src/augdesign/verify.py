"""Numerical checks of the contraction/augmented-design efficiency link.

Two independent routes are compared on concrete designs.

* Direct: eigen-decompose the v* x v* scaled information matrix of the
  filled augmented design.
* Closed form: feed the contraction's E_con (computed from a v x v
  matrix) through :func:`~augdesign.formulas.e_aug` and
  :func:`~augdesign.formulas.e_test`.

:func:`verify_spectrum` goes further and matches the two cef multisets
element by element. Every contraction cef ``theta`` yields the pair
``(k/v)(1 -/+ sqrt(1 - theta))``. The remaining ``v* - 2v + 1`` cefs
equal one. Numerically the pairs are formed from the incidence matrix's
singular values (see :func:`contraction_pairs`).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .construct import augment, fill_entries
from .designs import incidence
from .errors import MismatchedPair
from .formulas import e_aug, e_test
from .spectra import (
    augmented_cefs,
    contraction_cefs,
    harmonic_mean,
    symmetric_eigenvalues,
)

__all__ = [
    "TOL",
    "VerificationReport",
    "paired_cefs",
    "expected_augmented_cefs",
    "contraction_pairs",
    "b_matrix",
    "verify_formula",
    "verify_spectrum",
    "write_report",
]

TOL = 1e-8


@dataclass
class VerificationReport:
    """Outcome of one check: flag, worst deviation, and both sides' values."""

    kind: str
    passed: bool
    max_deviation: float
    e_direct: float
    e_formula: float
    cefs_direct: list
    cefs_formula: list
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)


def paired_cefs(thetas, v, k):
    """The 2(v-1) augmented cefs implied by contraction cefs ``thetas``."""
    th = np.asarray(thetas, dtype=float)
    root = np.sqrt(np.clip(1.0 - th, 0.0, None))
    return np.sort(np.concatenate([(k / v) * (1 - root), (k / v) * (1 + root)]))


def contraction_pairs(c):
    """Paired cefs ``(k -/+ sigma) / v`` from the singular values of the incidence matrix.

    ``sigma = k sqrt(1 - theta)``, so this is :func:`paired_cefs` without
    forming ``1 - theta``. That difference loses half the digits when
    theta is close to one, because of the square root. The largest
    singular value, k, is the trivial one and is dropped.
    """
    sigma = np.linalg.svd(incidence(c).astype(float), compute_uv=False)
    sigma = np.sort(sigma)[:-1]
    return np.sort(np.concatenate([(c.k - sigma) / c.v, (c.k + sigma) / c.v]))


def expected_augmented_cefs(pairs, v, k):
    """Full predicted cef multiset: unit cefs plus the paired values, sorted."""
    v_star = v * v - k * (v - 1)
    ones = np.ones(v_star - 2 * v + 1)
    return np.sort(np.concatenate([ones, pairs]))


def b_matrix(q):
    """``(1/v) [[k I, -N], [-N', k I]]`` with ``N = Q - J`` from the test-entry mask ``q``."""
    q = np.asarray(q, dtype=float)
    v = q.shape[0]
    k = v - int(round(q[0].sum()))
    n = q - np.ones((v, v))
    eye = k * np.eye(v)
    return np.block([[eye, -n], [-n.T, eye]]) / v


def verify_formula(c, seed=0):
    """Direct E_aug of the filled design against the closed form, plus the test-entry variant.

    The E_test check removes k cefs equal to one (the checks) from the
    direct multiset before taking the harmonic mean.
    """
    d = fill_entries(augment(c), seed)
    con = contraction_cefs(c)
    aug = augmented_cefs(d)
    direct = np.asarray(aug.cefs)
    lhs, rhs = aug.e, e_aug(c.v, c.k, con.e)

    units = np.flatnonzero(np.abs(direct - 1.0) <= TOL)
    test_ok = len(units) >= c.k
    if test_ok:
        trimmed = np.delete(direct, units[: c.k])
        lhs_test = harmonic_mean(trimmed)
    else:
        lhs_test = float("nan")
    rhs_test = e_test(c.v, c.k, con.e)

    dev = abs(lhs - rhs)
    dev_test = abs(lhs_test - rhs_test) if test_ok else float("inf")
    passed = bool(dev <= TOL and dev_test <= TOL)
    return VerificationReport(
        kind="formula",
        passed=passed,
        max_deviation=float(max(dev, dev_test)),
        e_direct=float(lhs),
        e_formula=float(rhs),
        cefs_direct=direct.tolist(),
        cefs_formula=expected_augmented_cefs(contraction_pairs(c), c.v, c.k).tolist(),
        details={
            "v": c.v,
            "k": c.k,
            "seed": int(seed),
            "e_con": con.e,
            "e_test_direct": float(lhs_test),
            "e_test_formula": float(rhs_test),
            "e_test_deviation": float(dev_test),
        },
    )


def verify_spectrum(c, d):
    """Match the augmented cef multiset against the pairing predicted from ``c``.

    Also checks that the check-position matrix (``-N = J - Q``) equals
    ``incidence(c)``, that ``Q 1 = (v-k) 1`` for rows and columns, and
    that the explicit matrix B has the paired values plus ``{0, 2k/v}`` as
    its spectrum. Raises :class:`MismatchedPair` when ``d`` was not built
    from ``c``.
    """
    if (d.v, d.k) != (c.v, c.k):
        raise MismatchedPair(f"contraction is ({c.v}, {c.k}) but design is ({d.v}, {d.k})")
    n_con = incidence(c)
    pos = d.check_positions()
    if not np.array_equal(pos, n_con):
        raise MismatchedPair("check positions do not match the contraction incidence")
    # rows of the check-position matrix are labelled by treatment, so check the labels too
    for i, row in enumerate(c.rows):
        for j, t in enumerate(row):
            if d.grid[t - 1, j] != -(i + 1):
                raise MismatchedPair(f"cell ({t}, {j + 1}) should hold check {i + 1}")

    v, k = c.v, c.k
    q = d.q
    rowsum_ok = bool(np.all(q.sum(axis=1) == v - k) and np.all(q.sum(axis=0) == v - k))
    minus_n = np.ones((v, v), dtype=np.int64) - q

    con = contraction_cefs(c)
    aug = augmented_cefs(d)
    direct = np.asarray(aug.cefs)
    pairs = contraction_pairs(c)
    predicted = expected_augmented_cefs(pairs, v, k)
    dev = float(np.max(np.abs(direct - predicted)))

    b_eigs = symmetric_eigenvalues(b_matrix(q))
    b_pred = np.sort(np.concatenate([pairs, [0.0, 2.0 * k / v]]))
    b_dev = float(np.max(np.abs(b_eigs - b_pred)))

    v_star = d.v_star
    units = int(np.sum(np.abs(direct - 1.0) <= TOL))
    paired_units = int(np.sum(np.abs(pairs - 1.0) <= TOL))
    theta_dev = float(np.max(np.abs(pairs - paired_cefs(con.cefs, v, k))))

    passed = dev <= TOL and b_dev <= TOL and rowsum_ok
    return VerificationReport(
        kind="spectrum",
        passed=bool(passed),
        max_deviation=max(dev, b_dev),
        e_direct=aug.e,
        e_formula=harmonic_mean(predicted),
        cefs_direct=direct.tolist(),
        cefs_formula=predicted.tolist(),
        details={
            "v": v,
            "k": k,
            "v_star": v_star,
            "cef_deviation": dev,
            "theta_route_deviation": theta_dev,
            "b_matrix_deviation": b_dev,
            "unit_cefs": units,
            "unit_cefs_expected": v_star - 2 * v + 1 + paired_units,
            "minus_n_equals_incidence": bool(np.array_equal(minus_n, n_con)),
            "q_row_col_sums_ok": rowsum_ok,
        },
    )


def write_report(reports, path):
    payload = {
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
