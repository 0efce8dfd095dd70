"""Build contractions and turn them into augmented square-array designs.

The switch construction swaps the roles of contraction rows and
treatments, column by column. If contraction row ``i`` holds treatment
``t`` in column ``j``, then check ``i`` goes into array row ``t``, column
``j``. Each contraction row is a permutation, so every check lands once in
each array row. Columns are binary, so no array cell receives two checks.
"""

from __future__ import annotations

import csv
import io
from itertools import combinations
from pathlib import Path

import numpy as np

from .designs import AugmentedDesign, Contraction, check_dimensions, incidence
from .errors import AlreadyFilled, BadBlock, Disconnected, InvalidDesign, NoConnectedDesign
from .rng import SplitMix64
from .spectra import contraction_cefs, incidence_efficiency

__all__ = [
    "cyclic_contraction",
    "cyclic_blocks",
    "best_cyclic",
    "augment",
    "fill_entries",
    "augmented_to_csv",
    "augmented_from_csv",
    "write_augmented_csv",
    "read_augmented_csv",
]

# E values closer than this are treated as ties
TIE_TOL = 1e-12


def _normalize_block(v, block):
    try:
        elems = [int(a) for a in block]
    except (TypeError, ValueError):
        raise BadBlock(f"initial block must contain integers: {block!r}") from None
    if len(set(elems)) != len(elems):
        raise BadBlock(f"initial block has repeated elements: {sorted(elems)}")
    if any(not 1 <= a <= v for a in elems):
        raise BadBlock(f"initial block elements must lie in 1..{v}")
    return sorted(elems)


def cyclic_contraction(v, block, k=None):
    """Contraction developed cyclically from an initial block.

    Column ``j`` (0-based) holds ``{a + j mod v}``; row ``i`` is the cyclic
    development of the i-th smallest element of ``block``. Labels are
    1-based throughout.

    >>> cyclic_contraction(5, {1, 2, 3}).rows.tolist()
    [[1, 2, 3, 4, 5], [2, 3, 4, 5, 1], [3, 4, 5, 1, 2]]
    """
    elems = _normalize_block(v, block)
    if k is not None and len(elems) != k:
        raise BadBlock(f"initial block has {len(elems)} elements, expected k={k}")
    check_dimensions(v, len(elems))
    j = np.arange(v)
    rows = np.array([(a - 1 + j) % v + 1 for a in elems])
    return Contraction(v, len(elems), rows)


def cyclic_blocks(v, k):
    """Canonical initial blocks: sorted k-subsets of 1..v containing 1."""
    for rest in combinations(range(2, v + 1), k - 1):
        yield (1,) + rest


def best_cyclic(v, k):
    """Exhaustive search for the most efficient cyclic contraction.

    Every initial block containing 1 is tried (each translation class once).
    Disconnected designs are skipped. Ties within ``TIE_TOL`` keep the
    lexicographically smallest block. Returns ``(contraction, report)``.
    """
    check_dimensions(v, k)
    best_block, best_e = None, -np.inf
    for block in cyclic_blocks(v, k):
        c = cyclic_contraction(v, block)
        try:
            _, e = incidence_efficiency(incidence(c), k)
        except Disconnected:
            continue
        if e > best_e + TIE_TOL:
            best_block, best_e = block, e
    if best_block is None:
        raise NoConnectedDesign(0, f"no connected cyclic design for v={v}, k={k}")
    c = cyclic_contraction(v, best_block)
    return c, contraction_cefs(c)


def augment(c):
    """Place the k checks in a v x v array by the switch construction. Other cells stay blank."""
    grid = np.zeros((c.v, c.v), dtype=np.int64)
    cols = np.broadcast_to(np.arange(c.v), c.rows.shape)
    checks = np.broadcast_to(-np.arange(1, c.k + 1)[:, None], c.rows.shape)
    grid[c.rows - 1, cols] = checks
    return AugmentedDesign(c.v, c.k, grid)


def fill_entries(d, seed):
    """Fill the blanks with test entries 1..v(v-k) in a seeded random order.

    Blanks are listed row-major. The labels ``1..m`` are shuffled with
    ``SplitMix64(seed).shuffle`` (Fisher-Yates), and the i-th blank gets
    the i-th label of the shuffled list.
    """
    m = d.n_entries
    if d.n_blanks != m:
        raise AlreadyFilled(f"expected {m} blank cells, found {d.n_blanks}")
    labels = SplitMix64(seed).shuffle(list(range(1, m + 1)))
    grid = d.grid.copy()
    flat = grid.reshape(-1)
    flat[np.flatnonzero(flat == 0)] = labels
    return AugmentedDesign(d.v, d.k, grid)


# --- CSV format ----------------------------------------------------------------


def augmented_to_csv(d):
    """v rows of v comma-separated fields: ``C1``..``Ck``, ``T1``..``Tm``, or empty."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(d.labels())
    return buf.getvalue()


def _parse_cell(text):
    s = text.strip()
    if s == "":
        return 0
    if len(s) > 1 and s[0] in "CT" and s[1:].isdigit():
        n = int(s[1:])
        if n >= 1:
            return -n if s[0] == "C" else n
    raise InvalidDesign(f"unrecognized cell {text!r}")


def augmented_from_csv(text, k=None):
    """Parse the CSV grid. ``k`` defaults to the number of distinct checks seen."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise InvalidDesign("empty CSV")
    v = len(rows)
    if any(len(r) != v for r in rows):
        raise InvalidDesign("CSV grid must be square")
    grid = np.array([[_parse_cell(x) for x in r] for r in rows], dtype=np.int64)
    if k is None:
        k = len(np.unique(grid[grid < 0]))
    return AugmentedDesign(v, k, grid)


def write_augmented_csv(d, path):
    Path(path).write_text(augmented_to_csv(d), encoding="utf-8")


def read_augmented_csv(path, k=None):
    return augmented_from_csv(Path(path).read_text(encoding="utf-8"), k=k)
