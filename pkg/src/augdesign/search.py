"""Interchange hill-climbing over contractions to maximize E_con.

Algorithm, per restart ``r = 0 .. restarts-1``:

1. ``rng = SplitMix64.for_stream(seed, r)``.
2. Start design: initial block ``rng.sample(1..v, k)`` developed
   cyclically, then ``2v`` random *valid* moves applied blindly (invalid
   draws are redrawn and do not count). With ``start_best_cyclic`` (the
   default) restart 0 instead starts from :func:`best_cyclic` unperturbed,
   so the search can never do worse than the best cyclic design.
3. A move draws ``i = randbelow(k)``, ``j1 = randbelow(v)``,
   ``j2 = randbelow(v-1)`` (bumped by one if ``>= j1``) and swaps
   ``rows[i, j1]`` with ``rows[i, j2]``. The row stays a permutation. The
   move is rejected without evaluation if either column would then hold
   a treatment twice.
4. Evaluated moves are accepted when E does not drop (within
   ``EQUAL_TOL``). Only a strict gain resets the plateau counter. Every
   other iteration, whether rejected, worse or sideways, increments it. The
   restart ends after ``max_iters`` iterations, at ``plateau_limit``
   consecutive non-improving iterations, or once ``target_e`` is reached.

Disconnected states score ``E = 0``, so any connected neighbour is an
improvement. The overall best is the first design to reach the highest E.
A later design replaces it only if it is better by more than ``EQUAL_TOL``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .construct import best_cyclic, cyclic_contraction
from .designs import Contraction, EfficiencyReport, check_dimensions
from .errors import Disconnected, InvalidParams, TargetUnreached
from .rng import SplitMix64
from .spectra import contraction_cefs, incidence_efficiency

__all__ = ["SearchConfig", "SearchResult", "search_contraction", "EQUAL_TOL", "TARGET_TOL"]

EQUAL_TOL = 1e-12
# published E values carry 6 decimals
TARGET_TOL = 5e-7


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    restarts: int = 200
    max_iters_per_restart: int = 20000
    plateau_limit: int = 2000
    target_e: Optional[float] = None
    start_best_cyclic: bool = True

    def __post_init__(self):
        for name in ("restarts", "max_iters_per_restart", "plateau_limit"):
            val = getattr(self, name)
            if not isinstance(val, (int, np.integer)) or val < 1:
                raise InvalidParams(f"{name} must be a positive integer, got {val!r}")
        if self.target_e is not None and not 0.0 < self.target_e <= 1.0:
            raise InvalidParams(f"target_e must lie in (0, 1], got {self.target_e}")


@dataclass(frozen=True)
class SearchResult:
    """Best contraction found. ``iters_used`` and ``evaluations`` are totals over all restarts."""

    best: Contraction
    report: EfficiencyReport
    restart_index: int
    iters_used: int
    evaluations: int
    target_reached: Optional[bool] = None


class _State:
    """Mutable k x v array plus its incidence matrix, kept in sync."""

    def __init__(self, rows):
        self.rows = np.array(rows, dtype=np.int64)
        k, v = self.rows.shape
        self.k, self.v = k, v
        self.n = np.zeros((v, v))
        self.n[self.rows - 1, np.broadcast_to(np.arange(v), self.rows.shape)] = 1.0

    def draw(self, rng):
        i = rng.randbelow(self.k)
        j1 = rng.randbelow(self.v)
        j2 = rng.randbelow(self.v - 1)
        if j2 >= j1:
            j2 += 1
        return i, j1, j2

    def valid(self, i, j1, j2):
        a, b = self.rows[i, j1], self.rows[i, j2]
        return self.n[b - 1, j1] == 0 and self.n[a - 1, j2] == 0

    def swap(self, i, j1, j2):
        a, b = self.rows[i, j1], self.rows[i, j2]
        self.rows[i, j1], self.rows[i, j2] = b, a
        n = self.n
        n[a - 1, j1] = 0.0
        n[b - 1, j2] = 0.0
        n[b - 1, j1] = 1.0
        n[a - 1, j2] = 1.0

    def efficiency(self):
        try:
            return incidence_efficiency(self.n, self.k)[1]
        except Disconnected:
            return 0.0


def _start_state(v, k, rng):
    block = rng.sample(range(1, v + 1), k)
    state = _State(cyclic_contraction(v, block).rows)
    applied, attempts = 0, 0
    while applied < 2 * v and attempts < 1000 * v:
        attempts += 1
        move = state.draw(rng)
        if state.valid(*move):
            state.swap(*move)
            applied += 1
    return state


def _climb(v, k, cfg, rng, target, start=None, callback=None):
    """One restart. Returns (best_rows, best_e, iters, evaluations)."""
    state = _State(start) if start is not None else _start_state(v, k, rng)
    cur = state.efficiency()
    evals = 1
    best_rows, best_e = state.rows.copy(), cur
    if callback is not None:
        callback(0, cur, state.rows)
    plateau = 0
    it = 0
    while it < cfg.max_iters_per_restart and plateau < cfg.plateau_limit:
        if target is not None and best_e >= target:
            break
        it += 1
        move = state.draw(rng)
        if not state.valid(*move):
            plateau += 1
            continue
        state.swap(*move)
        e = state.efficiency()
        evals += 1
        if e > cur + EQUAL_TOL:
            cur = e
            plateau = 0
            if e > best_e + EQUAL_TOL:
                best_rows, best_e = state.rows.copy(), e
        elif e >= cur - EQUAL_TOL:
            cur = e
            plateau += 1
        else:
            state.swap(*move)
            plateau += 1
            continue
        if callback is not None:
            callback(it, cur, state.rows)
    return best_rows, best_e, it, evals


def search_contraction(v, k, cfg=None, strict=False, callback=None):
    """Search for a contraction with maximal average efficiency factor.

    Runs ``cfg.restarts`` independent hill-climbs (see module docstring) and
    returns the best design over all of them as a :class:`SearchResult`.
    The result is fully determined by ``(v, k, cfg)``.

    When ``cfg.target_e`` is set, the search stops as soon as it is reached
    (within ``TARGET_TOL``) and ``result.target_reached`` records the
    outcome. With ``strict=True`` an unreached target raises
    :class:`TargetUnreached`, with the result attached as ``exc.result``.

    ``callback(restart, iteration, e, rows)``, if given, is called with the
    start state of every restart and after every accepted move. ``rows`` is
    the live array and must not be modified.
    """
    try:
        check_dimensions(v, k)
    except ValueError as exc:
        raise InvalidParams(str(exc)) from None
    cfg = cfg or SearchConfig()
    target = None if cfg.target_e is None else cfg.target_e - TARGET_TOL

    best_rows, best_e, best_restart = None, -1.0, -1
    total_iters = total_evals = 0
    for r in range(cfg.restarts):
        rng = SplitMix64.for_stream(cfg.seed, r)
        start = None
        if r == 0 and cfg.start_best_cyclic:
            start = best_cyclic(v, k)[0].rows
        hook = None if callback is None else (lambda it, e, rows, r=r: callback(r, it, e, rows))
        rows, e, iters, evals = _climb(v, k, cfg, rng, target, start, hook)
        total_iters += iters
        total_evals += evals
        if e > best_e + EQUAL_TOL:
            best_rows, best_e, best_restart = rows, e, r
        if target is not None and best_e >= target:
            break

    best = Contraction(v, k, best_rows)
    report = contraction_cefs(best)
    reached = None if target is None else bool(report.e >= target)
    result = SearchResult(best, report, best_restart, total_iters, total_evals, reached)
    if strict and reached is False:
        raise TargetUnreached(result, cfg.target_e)
    return result
