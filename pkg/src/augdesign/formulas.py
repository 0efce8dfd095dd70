"""Closed-form links between contraction efficiency and derived designs.

These functions only take scalars (v, k, E_con). They never look at an
actual design, which makes them usable for auditing published E values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParams, NonPositiveValue

__all__ = [
    "DesignParams",
    "v_star",
    "e_res",
    "e_aug",
    "e_test",
    "a_test",
    "e_con_from_a_abd",
]


@dataclass(frozen=True)
class DesignParams:
    v: int
    k: int
    e_con: float

    def __post_init__(self):
        if not isinstance(self.v, int) or not isinstance(self.k, int):
            raise InvalidParams("v and k must be integers")
        if self.v < 4 or not 2 <= self.k <= self.v - 2:
            raise InvalidParams(f"need v >= 4 and 2 <= k <= v-2, got v={self.v}, k={self.k}")
        if not (math.isfinite(self.e_con) and 0.0 < self.e_con <= 1.0):
            raise InvalidParams(f"E_con must lie in (0, 1], got {self.e_con}")


def _params(p, k=None, e_con=None):
    # accept either a DesignParams or (v, k, e_con)
    if isinstance(p, DesignParams):
        return p
    return DesignParams(int(p), int(k), float(e_con))


def v_star(v, k):
    """Number of treatments in the v x v augmented design."""
    return v * v - k * (v - 1)


def e_res(p, k=None, e_con=None):
    """Average efficiency factor of the two-replicate resolvable design for vk treatments."""
    p = _params(p, k, e_con)
    v, k = p.v, p.k
    return (v * k - 1) / ((v * k - 2 * v + 1) + 4 * (v - 1) / p.e_con)


def e_aug(p, k=None, e_con=None):
    """Average efficiency factor of the whole augmented design, checks included."""
    p = _params(p, k, e_con)
    v, k = p.v, p.k
    vs = v_star(v, k)
    return (vs - 1) / ((vs - 2 * v + 1) + 2 * v * (v - 1) / (k * p.e_con))


def e_test(p, k=None, e_con=None):
    """Average efficiency factor restricted to the test entries.

    The k checks are orthogonal to rows and columns and each contribute a
    unit cef, so k is removed from both numerator and denominator of
    :func:`e_aug`.
    """
    p = _params(p, k, e_con)
    v, k = p.v, p.k
    vs = v_star(v, k)
    return (vs - 1 - k) / ((vs - 2 * v + 1 - k) + 2 * v * (v - 1) / (k * p.e_con))


def a_test(e_test_value):
    """Average pairwise variance of test-entry differences, 2 / E_test."""
    if not e_test_value > 0:
        raise NonPositiveValue(f"E_test must be positive, got {e_test_value}")
    return 2.0 / e_test_value


def e_con_from_a_abd(k, a_abd):
    """Convert an average pairwise variance A_abd to E_con = 2 / (k A_abd)."""
    if not isinstance(k, int) or k < 2:
        raise InvalidParams(f"k must be an integer >= 2, got {k}")
    if not a_abd > 0:
        raise InvalidParams(f"A_abd must be positive, got {a_abd}")
    return 2.0 / (k * a_abd)
