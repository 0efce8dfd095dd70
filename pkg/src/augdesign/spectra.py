"""Information matrices and canonical efficiency factors.

For a design with replication vector ``r`` the scaled information matrix is
``A* = r^(-1/2) A r^(-1/2)``. It always annihilates ``r^(1/2)``, so a
connected design has exactly one zero eigenvalue. The remaining eigenvalues
are the canonical efficiency factors (cefs), and their harmonic mean is the
average efficiency factor ``E``.
"""

from __future__ import annotations

import numpy as np

from .designs import EfficiencyReport, incidence
from .errors import Disconnected, InvalidDesign, NonPositiveValue, NotSymmetric

__all__ = [
    "ZERO_TOL",
    "symmetric_eigenvalues",
    "jacobi_eigenvalues",
    "harmonic_mean",
    "contraction_information",
    "augmented_information",
    "nontrivial_eigenvalues",
    "incidence_efficiency",
    "contraction_cefs",
    "augmented_cefs",
    "trivial_upper_bound",
]

ZERO_TOL = 1e-8
SYM_TOL = 1e-12


def _as_symmetric(m):
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.abs(a - a.T) <= SYM_TOL * np.maximum(1.0, np.abs(a))):
        raise NotSymmetric("matrix is not symmetric")
    return a


def jacobi_eigenvalues(m, tol=1e-14, max_sweeps=100):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps over every off-diagonal pair (p, q) in row order, annihilating
    ``a[p, q]`` with a plane rotation (Rutishauser's stable angle formulas).
    Entries already below ``tol`` times the Frobenius norm are skipped. The
    iteration stops after a sweep that performs no rotation. Returns the
    eigenvalues in ascending order.

    Cost is O(n^3) per sweep with a Python-level loop over pairs, so this is
    meant for moderate orders (up to roughly 100).
    """
    a = _as_symmetric(m).copy()
    n = a.shape[0]
    scale = np.linalg.norm(a)
    if n == 1 or scale == 0.0:
        return np.sort(a.diagonal().copy())
    small = tol * scale
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= small:
                    continue
                rotated = True
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q]
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
        if not rotated:
            break
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.sort(a.diagonal())


def symmetric_eigenvalues(m, method="lapack"):
    """All eigenvalues of a symmetric matrix, ascending.

    ``method="lapack"`` uses ``numpy.linalg.eigvalsh``; ``method="jacobi"``
    uses :func:`jacobi_eigenvalues`. Both are deterministic for identical
    input. Raises :class:`NotSymmetric` for asymmetric input.
    """
    a = _as_symmetric(m)
    if method == "lapack":
        return np.linalg.eigvalsh(a)
    if method == "jacobi":
        return jacobi_eigenvalues(a)
    raise ValueError(f"unknown eigen-solver {method!r}")


def harmonic_mean(values):
    vals = np.asarray(values, dtype=float)
    if vals.size == 0:
        raise NonPositiveValue("harmonic mean of an empty sequence")
    if np.any(vals <= 0):
        raise NonPositiveValue("harmonic mean needs strictly positive values")
    return float(vals.size / np.sum(1.0 / vals))


def nontrivial_eigenvalues(a_star, method="lapack"):
    """Drop the single zero eigenvalue of a scaled information matrix.

    Raises :class:`Disconnected` when two or more eigenvalues are within
    ``ZERO_TOL`` of zero.
    """
    w = symmetric_eigenvalues(a_star, method=method)
    zero = np.abs(w) <= ZERO_TOL
    n_zero = int(zero.sum())
    if n_zero >= 2:
        raise Disconnected(n_zero)
    if n_zero == 0:
        # A* r^(1/2) = 0 always holds, so this means the matrix was mis-built.
        raise RuntimeError("information matrix has no zero eigenvalue")
    return w[~zero]


def trivial_upper_bound(v, k):
    """Arithmetic mean of the cefs of a binary equireplicate block design."""
    return v * (k - 1) / ((v - 1) * k)


def contraction_information(n, k):
    """Scaled information matrix ``I - N N' / k^2`` of the column blocks (r = k)."""
    n = np.asarray(n, dtype=float)
    return np.eye(n.shape[0]) - (n @ n.T) / float(k * k)


def incidence_efficiency(n, k, method="lapack"):
    """Return ``(cefs, E)`` for an incidence matrix; the search hot path.

    With LAPACK the symmetry check is skipped (``N N'`` is symmetric by
    construction) and the eigenvalues of ``N N'`` are mapped to those of
    ``I - N N'/k^2`` directly.
    """
    if method != "lapack":
        cefs = nontrivial_eigenvalues(contraction_information(n, k), method=method)
    else:
        n = np.asarray(n, dtype=float)
        w = 1.0 - np.linalg.eigvalsh(n @ n.T)[::-1] / float(k * k)
        zero = np.abs(w) <= ZERO_TOL
        n_zero = int(zero.sum())
        if n_zero >= 2:
            raise Disconnected(n_zero)
        if n_zero == 0:
            raise RuntimeError("information matrix has no zero eigenvalue")
        cefs = w[~zero]
    return cefs, cefs.size / float(np.sum(1.0 / cefs))


def contraction_cefs(c, method="lapack"):
    """Efficiency report of a contraction, treating its columns as blocks.

    The rows are complete replicates, so the row-column efficiency equals
    the efficiency of the column blocks alone.
    """
    cefs, _ = incidence_efficiency(incidence(c), c.k, method=method)
    return EfficiencyReport.from_cefs(cefs, ub_trivial=trivial_upper_bound(c.v, c.k))


def augmented_information(d):
    """Return ``(A, A*)`` for a filled augmented design.

    ``A = diag(r) - N_R N_R'/v - N_C N_C'/v + r r'/v^2`` with treatments
    ordered entries first, then checks.
    """
    v = d.v
    r = d.replication()
    nr = d.row_incidence()
    nc = d.column_incidence()
    a = np.diag(r) - (nr @ nr.T) / v - (nc @ nc.T) / v + np.outer(r, r) / (v * v)
    a = 0.5 * (a + a.T)
    s = 1.0 / np.sqrt(r)
    a_star = a * np.outer(s, s)
    return a, 0.5 * (a_star + a_star.T)


def augmented_cefs(d, method="lapack"):
    """Efficiency report of an augmented design by direct eigen-decomposition.

    Returns the ``v* - 1`` cefs; ``ub_trivial`` is their arithmetic mean.
    """
    if not d.is_filled:
        raise InvalidDesign("augmented design has blanks; fill entries first")
    _, a_star = augmented_information(d)
    cefs = nontrivial_eigenvalues(a_star, method=method)
    return EfficiencyReport.from_cefs(cefs)
