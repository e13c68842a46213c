"""Brute-force lattice oracle, independent of the algebraic solvers.

Scans a regular lattice over an axis-aligned window, replays every
constraint directly against the instance data (with a tiny slack for float
lattice arithmetic) and minimizes the objective over the feasible lattice
points.  Deliberately naive: its only job is to cross-check the closed-form
machinery, so it shares no code path with it beyond the constraint replay.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceError
from .solutions import objective_batch, violation_batch

BOUNDARY_SLACK = 1e-12
ATTAIN_TOL = 1e-9
MAX_LATTICE_POINTS = 30_000_000
_CHUNK = 262_144


@dataclass(frozen=True, eq=False)
class OracleResult:
    """Outcome of a lattice scan.

    best_value is None when no lattice point was feasible.  best_points
    holds every feasible lattice point whose objective is within ATTAIN_TOL
    of best_value, in lexicographic order.
    """

    best_value: float | None
    best_points: np.ndarray
    grid_step: float
    evaluated: int

    @property
    def feasible(self) -> bool:
        return self.best_value is not None


def _lattice_axes(lo, hi, step: float) -> list[np.ndarray]:
    lo = np.asarray(lo, dtype=np.float64)
    hi = np.asarray(hi, dtype=np.float64)
    if lo.ndim != 1 or lo.shape != hi.shape:
        raise DomainError(f"window bounds must be equal-length vectors, got {lo.shape} and {hi.shape}")
    if lo.shape[0] > 3:
        raise DomainError(f"lattice scans support dimension <= 3, got {lo.shape[0]}")
    if not (np.isfinite(lo).all() and np.isfinite(hi).all()) or np.any(lo > hi):
        raise DomainError("window bounds must be finite with lo <= hi")
    if not (isinstance(step, (int, float)) and np.isfinite(step) and step > 0):
        raise DomainError("step must be a positive real")
    axes = []
    for a, b in zip(lo, hi):
        count = int(np.floor((b - a) / step + 1e-9)) + 1
        axes.append(a + step * np.arange(count))
    return axes


def _lattice_chunks(axes: list[np.ndarray], max_points: int):
    dims = [ax.shape[0] for ax in axes]
    total = 1
    for d in dims:
        total *= d
    if total > max_points:
        raise ResourceError(f"lattice of {total} points exceeds the cap of {max_points}")
    # Row-major (last axis fastest) enumeration, materializing one chunk at
    # a time so the cap bounds work, not memory.
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total))
        coords = np.empty((idx.shape[0], len(axes)))
        rem = idx
        for d in range(len(axes) - 1, -1, -1):
            rem, pos = np.divmod(rem, dims[d])
            coords[:, d] = axes[d][pos]
        yield coords


def grid_minimize(
    inst, lo, hi, step: float, *, max_points: int = MAX_LATTICE_POINTS, collect_points: bool = True
) -> OracleResult:
    """Minimize the instance objective over feasible lattice points.

    The window [lo, hi] is scanned at the given step; constraints are
    replayed with BOUNDARY_SLACK to absorb lattice float rounding.  With
    collect_points=False the second sweep that gathers the attaining points
    is skipped and best_points comes back empty (half the work when only
    the value matters).
    """
    axes = _lattice_axes(lo, hi, step)
    if len(axes) != inst.dim:
        raise DomainError(f"window dimension {len(axes)} does not match instance dimension {inst.dim}")
    best = np.inf
    evaluated = 0
    for chunk in _lattice_chunks(axes, max_points):
        evaluated += chunk.shape[0]
        feas = violation_batch(inst, chunk) <= BOUNDARY_SLACK
        if feas.any():
            vals = objective_batch(inst, chunk[feas])
            cmin = float(vals.min())
            if cmin < best:
                best = cmin
    if not np.isfinite(best):
        return OracleResult(None, np.empty((0, inst.dim)), float(step), evaluated)
    if not collect_points:
        return OracleResult(best, np.empty((0, inst.dim)), float(step), evaluated)
    winners = []
    for chunk in _lattice_chunks(axes, max_points):
        feas = violation_batch(inst, chunk) <= BOUNDARY_SLACK
        if feas.any():
            pts = chunk[feas]
            vals = objective_batch(inst, pts)
            hit = vals <= best + ATTAIN_TOL
            if hit.any():
                winners.append(pts[hit])
    points = np.concatenate(winners, axis=0)
    # row-major enumeration already yields lexicographic order
    return OracleResult(best, points, float(step), evaluated)


def grid_feasible(inst, lo, hi, step: float, *, max_points: int = MAX_LATTICE_POINTS) -> bool:
    """Whether any lattice point in the window satisfies all constraints.

    Stops at the first feasible point.
    """
    axes = _lattice_axes(lo, hi, step)
    if len(axes) != inst.dim:
        raise DomainError(f"window dimension {len(axes)} does not match instance dimension {inst.dim}")
    for chunk in _lattice_chunks(axes, max_points):
        if np.any(violation_batch(inst, chunk) <= BOUNDARY_SLACK):
            return True
    return False


__all__ = [
    "OracleResult",
    "grid_minimize",
    "grid_feasible",
    "BOUNDARY_SLACK",
    "ATTAIN_TOL",
    "MAX_LATTICE_POINTS",
]
