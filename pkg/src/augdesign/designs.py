"""Core design types: contractions, augmented square arrays, efficiency reports.

Treatment labels are 1-based everywhere a user can see them. Internally
arrays are plain ``numpy`` integer arrays holding those same 1-based labels;
only matrix row/column positions are 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    BadDimensions,
    DuplicateInColumn,
    InvalidDesign,
    RowNotPermutation,
)

__all__ = [
    "Contraction",
    "AugmentedDesign",
    "EfficiencyReport",
    "validate_contraction",
    "incidence",
    "columns_from_incidence",
    "check_dimensions",
    "load_contraction",
    "save_contraction",
    "contraction_to_json",
    "contraction_from_json",
]


def check_dimensions(v, k):
    """Raise :class:`BadDimensions` unless ``v >= 4`` and ``2 <= k <= v - 2``."""
    if not isinstance(v, (int, np.integer)) or not isinstance(k, (int, np.integer)):
        raise BadDimensions(v, k, "v and k must be integers")
    if v < 4:
        raise BadDimensions(v, k, "need v >= 4")
    if not 2 <= k <= v - 2:
        raise BadDimensions(v, k, "need 2 <= k <= v-2")


def _check_rows(v, k, rows):
    """Shared validation. ``rows`` is a k x v integer array. Indices in errors are 1-based."""
    check_dimensions(v, k)
    if rows.shape != (k, v):
        raise BadDimensions(v, k, f"rows have shape {rows.shape}, expected ({k}, {v})")
    target = np.arange(1, v + 1)
    for i, row in enumerate(rows):
        if not np.array_equal(np.sort(row), target):
            raise RowNotPermutation(i + 1)
    for j in range(v):
        if len(set(rows[:, j].tolist())) != k:
            raise DuplicateInColumn(j + 1)


def _as_rows(rows):
    try:
        arr = np.array(rows)
    except (TypeError, ValueError) as exc:
        raise InvalidDesign(f"rows are not a rectangular integer array: {exc}") from None
    if arr.ndim != 2 or arr.size == 0:
        raise InvalidDesign("rows must be a non-empty 2-d array")
    if not np.issubdtype(arr.dtype, np.integer):
        if arr.dtype == bool or not np.all(np.equal(np.mod(arr, 1), 0)):
            raise InvalidDesign("treatment labels must be integers")
        arr = arr.astype(np.int64)
    return arr.astype(np.int64)


@dataclass(frozen=True, eq=False)
class Contraction:
    """A k x v row-column design whose rows are complete replicates.

    Every row is a permutation of ``1..v`` and every column holds ``k``
    distinct treatments, i.e. the array is a k x v Latin rectangle. The
    columns are the incomplete blocks (size ``k``), each treatment is
    replicated ``k`` times.
    """

    v: int
    k: int
    rows: np.ndarray

    def __post_init__(self):
        arr = _as_rows(self.rows)
        _check_rows(int(self.v), int(self.k), arr)
        arr.setflags(write=False)
        object.__setattr__(self, "v", int(self.v))
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "rows", arr)

    @classmethod
    def from_rows(cls, rows):
        arr = _as_rows(rows)
        return cls(arr.shape[1], arr.shape[0], arr)

    def column_sets(self):
        return [frozenset(self.rows[:, j].tolist()) for j in range(self.v)]

    def __eq__(self, other):
        if not isinstance(other, Contraction):
            return NotImplemented
        return self.v == other.v and self.k == other.k and np.array_equal(self.rows, other.rows)

    def __hash__(self):
        return hash((self.v, self.k, self.rows.tobytes()))

    def __repr__(self):
        body = ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.rows.tolist())
        return f"Contraction(v={self.v}, k={self.k}, rows=({body}))"

    def to_dict(self):
        return {"v": self.v, "k": self.k, "rows": self.rows.tolist()}


def validate_contraction(c):
    """Return ``c`` unchanged if it is a valid contraction.

    ``c`` may be a :class:`Contraction` or a raw mapping with keys ``v``,
    ``k`` and ``rows``; raw input is converted. Raises
    :class:`RowNotPermutation`, :class:`DuplicateInColumn` or
    :class:`BadDimensions` (row/column indices are 1-based).
    """
    if isinstance(c, Contraction):
        _check_rows(c.v, c.k, c.rows)
        return c
    if isinstance(c, dict):
        return Contraction(c["v"], c["k"], c["rows"])
    raise TypeError(f"cannot validate {type(c).__name__} as a contraction")


def incidence(c):
    """v x v treatment-by-column 0/1 matrix: ``N[t-1, j] = 1`` iff t is in column j."""
    n = np.zeros((c.v, c.v), dtype=np.int64)
    cols = np.broadcast_to(np.arange(c.v), c.rows.shape)
    n[c.rows - 1, cols] = 1
    return n


def columns_from_incidence(n):
    """Column contents (1-based treatment sets) recovered from an incidence matrix."""
    n = np.asarray(n)
    return [frozenset((np.flatnonzero(n[:, j]) + 1).tolist()) for j in range(n.shape[1])]


# --- contraction file format -------------------------------------------------

_CONTRACTION_KEYS = {"v", "k", "rows"}


def contraction_from_json(text):
    """Parse the canonical contraction JSON object. Unknown fields are rejected."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDesign(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InvalidDesign("contraction file must hold a JSON object")
    extra = set(obj) - _CONTRACTION_KEYS
    missing = _CONTRACTION_KEYS - set(obj)
    if extra:
        raise InvalidDesign(f"unknown fields: {sorted(extra)}")
    if missing:
        raise InvalidDesign(f"missing fields: {sorted(missing)}")
    v, k, rows = obj["v"], obj["k"], obj["rows"]
    if type(v) is not int or type(k) is not int:
        raise InvalidDesign("v and k must be JSON integers")
    if not isinstance(rows, list) or not all(
        isinstance(r, list) and all(type(x) is int for x in r) for r in rows
    ):
        raise InvalidDesign("rows must be an array of integer arrays")
    return Contraction(v, k, rows)


def contraction_to_json(c):
    return json.dumps(c.to_dict()) + "\n"


def load_contraction(path):
    return contraction_from_json(Path(path).read_text(encoding="utf-8"))


def save_contraction(c, path):
    Path(path).write_text(contraction_to_json(c), encoding="utf-8")


# --- augmented design --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AugmentedDesign:
    """A v x v array of checks and unreplicated test entries.

    ``grid`` codes cells as integers: ``-c`` for check ``c`` (1..k), ``+e``
    for test entry ``e`` (1..v(v-k)) and ``0`` for a blank not yet filled.
    Each check occurs once in every row and every column, so there are
    exactly ``v(v-k)`` non-check cells.
    """

    v: int
    k: int
    grid: np.ndarray
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        v, k = int(self.v), int(self.k)
        check_dimensions(v, k)
        g = np.array(self.grid, dtype=np.int64)
        if g.shape != (v, v):
            raise BadDimensions(v, k, f"grid has shape {g.shape}, expected ({v}, {v})")
        for c in range(1, k + 1):
            mask = g == -c
            if not (np.all(mask.sum(axis=0) == 1) and np.all(mask.sum(axis=1) == 1)):
                raise InvalidDesign(f"check {c} must appear once in every row and column")
        if np.any(g < -k):
            raise InvalidDesign("check label out of range")
        m = v * (v - k)
        entries = g[g > 0]
        if np.any(entries > m):
            raise InvalidDesign(f"entry label out of range 1..{m}")
        if len(np.unique(entries)) != len(entries):
            raise InvalidDesign("an entry label appears more than once")
        g.setflags(write=False)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "grid", g)

    @property
    def n_entries(self):
        return self.v * (self.v - self.k)

    @property
    def v_star(self):
        """Total number of treatments: v^2 - k(v-1)."""
        return self.v * self.v - self.k * (self.v - 1)

    @property
    def is_filled(self):
        return not np.any(self.grid == 0)

    @property
    def n_blanks(self):
        return int(np.count_nonzero(self.grid == 0))

    @property
    def q(self):
        """1 where the cell is not a check (test entry or blank)."""
        return (self.grid >= 0).astype(np.int64)

    def check_positions(self):
        """1 where the cell holds a check; equals ``J - Q``."""
        return (self.grid < 0).astype(np.int64)

    def replication(self):
        """Replication vector, entries first then checks: (1,...,1, v,...,v)."""
        return np.concatenate([np.ones(self.n_entries), np.full(self.k, float(self.v))])

    def _treatment_index(self):
        # entries 1..m -> 0..m-1, checks 1..k -> m..m+k-1
        if not self.is_filled:
            raise InvalidDesign("design has unfilled cells; call fill_entries first")
        m = self.n_entries
        g = self.grid
        return np.where(g > 0, g - 1, m - g - 1)

    def row_incidence(self):
        """v* x v counts of each treatment in each array row (N_R)."""
        if "nr" not in self._cache:
            idx = self._treatment_index()
            n = np.zeros((self.v_star, self.v))
            np.add.at(n, (idx, np.broadcast_to(np.arange(self.v)[:, None], idx.shape)), 1)
            self._cache["nr"] = n
        return self._cache["nr"]

    def column_incidence(self):
        """v* x v counts of each treatment in each array column (N_C)."""
        if "nc" not in self._cache:
            idx = self._treatment_index()
            n = np.zeros((self.v_star, self.v))
            np.add.at(n, (idx, np.broadcast_to(np.arange(self.v)[None, :], idx.shape)), 1)
            self._cache["nc"] = n
        return self._cache["nc"]

    def labels(self):
        """Grid of display labels: ``C1``.., ``T1``.., ``''`` for blanks."""
        out = []
        for row in self.grid.tolist():
            out.append(["" if x == 0 else (f"C{-x}" if x < 0 else f"T{x}") for x in row])
        return out

    def __eq__(self, other):
        if not isinstance(other, AugmentedDesign):
            return NotImplemented
        return self.v == other.v and self.k == other.k and np.array_equal(self.grid, other.grid)

    def __hash__(self):
        return hash((self.v, self.k, self.grid.tobytes()))


# --- efficiency report -------------------------------------------------------


@dataclass(frozen=True)
class EfficiencyReport:
    """Canonical efficiency factors and their harmonic mean.

    ``ub_trivial`` is the arithmetic mean of the cefs, which bounds the
    harmonic mean ``e`` from above. It is the "trivial/AM bound", not the
    refined bound used by design-generation packages.
    """

    cefs: tuple
    e: float
    ub_trivial: float

    @property
    def pct_ub_trivial(self):
        return 100.0 * self.e / self.ub_trivial

    @classmethod
    def from_cefs(cls, cefs, ub_trivial=None):
        vals = np.sort(np.asarray(cefs, dtype=float))
        if vals.size == 0 or np.any(vals <= 0):
            raise InvalidDesign("canonical efficiency factors must be positive")
        e = vals.size / np.sum(1.0 / vals)
        ub = float(np.mean(vals)) if ub_trivial is None else float(ub_trivial)
        return cls(tuple(vals.tolist()), float(e), ub)

    def to_dict(self):
        return {
            "cefs": list(self.cefs),
            "e": self.e,
            "ub_trivial": self.ub_trivial,
            "pct_ub_trivial": self.pct_ub_trivial,
        }
