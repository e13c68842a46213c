"""Exact minimax location in the plane under the rectilinear metric.

The rotation y = (x1 + x2, x2 - x1) turns rectilinear distance into
Chebyshev distance: d1(x, p) = dinf(rotate(x), rotate(p)).  Both plane
variants therefore reduce to Chebyshev instances in rotated coordinates:

* StripInstance: points with weights/addends/caps, a tilted rectangle
  f1 <= x1 + x2 <= g1, f2 <= x2 - x1 <= g2 (an axis box after rotation), and
  a vertical strip a <= x1 <= b.  In rotated coordinates the strip becomes
  the difference bounds y1 >= 2a + y2 and y2 >= -2b + y1.

* TiltedStripInstance: the strip is tilted to a + x2 <= c*x1 <= b + x2 with
  slope c not in {1, -1}.  Substituting y gives scaled difference bounds on
  (c-1)*y1 and (c+1)*y2, i.e. a scaled Chebyshev instance with
  scale ((c-1), (c+1)) and the same two-entry bound matrix.

The returned boxes carry the rotation (and scaling) in their transform, so
members come back in original plane coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .boxes import SolutionBox, rotate45_transform, rotate_scaled_transform
from .chebyshev import (
    ChebyshevInstance,
    FeasibilityReport,
    ScaledChebyshevInstance,
    _as_float_array,
)
from .chebyshev import check_feasibility as _check_chebyshev
from .chebyshev import solve_particular, solve_scaled
from .errors import DimensionError, InstanceError
from .linear import Infeasible
from .semiring import BOTTOM


@dataclass(frozen=True, eq=False, kw_only=True)
class StripInstance:
    """Minimax rectilinear location restricted to a vertical strip.

    points      (m, 2), one plane point per row.
    weights     (m,) positive; addends (m,) real; caps as in the Chebyshev
                variant (caps bound d1 distance here).
    box_lo/box_hi  length-2 bounds (f1, f2) <= (x1+x2, x2-x1) <= (g1, g2),
                a rectangle tilted 45 degrees.
    strip_lo/strip_hi  the strip a <= x1 <= b, a <= b.
    """

    points: np.ndarray
    weights: np.ndarray
    addends: np.ndarray
    box_lo: np.ndarray
    box_hi: np.ndarray
    strip_lo: float
    strip_hi: float
    caps: np.ndarray | None = None

    def __post_init__(self):
        points = _as_float_array(self.points, "points")
        if points.ndim != 2 or points.shape[1] != 2:
            raise InstanceError(f"points must be an (m, 2) array, got shape {points.shape}")
        # Delegate the shared field validation to the Chebyshev constructor.
        probe = ChebyshevInstance(
            points=points,
            weights=self.weights,
            addends=self.addends,
            caps=self.caps,
            box_lo=self.box_lo,
            box_hi=self.box_hi,
            diff_bounds=np.full((2, 2), BOTTOM),
        )
        object.__setattr__(self, "points", probe.points)
        object.__setattr__(self, "weights", probe.weights)
        object.__setattr__(self, "addends", probe.addends)
        object.__setattr__(self, "caps", probe.caps)
        object.__setattr__(self, "box_lo", probe.box_lo)
        object.__setattr__(self, "box_hi", probe.box_hi)
        lo = self.strip_lo
        hi = self.strip_hi
        if not (isinstance(lo, (int, float)) and np.isfinite(lo)):
            raise InstanceError("a must be a finite real")
        if not (isinstance(hi, (int, float)) and np.isfinite(hi)):
            raise InstanceError("b must be a finite real")
        if lo > hi:
            raise InstanceError("a exceeds b")
        object.__setattr__(self, "strip_lo", float(lo))
        object.__setattr__(self, "strip_hi", float(hi))

    @property
    def m(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return 2


@dataclass(frozen=True, eq=False, kw_only=True)
class TiltedStripInstance(StripInstance):
    """Strip variant with the band a + x2 <= c*x1 <= b + x2.

    slope c must avoid 1 and -1: either value collapses one rotated
    coordinate's scale factor (c-1 or c+1) to zero.
    """

    slope: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        super().__post_init__()
        c = self.slope
        if c is None or not (isinstance(c, (int, float)) and np.isfinite(c)):
            raise InstanceError("c must be a finite real")
        if c == 1 or c == -1:
            raise InstanceError("c must differ from 1 and -1")
        object.__setattr__(self, "slope", float(c))


def rotate(point, direction: str = "forward") -> np.ndarray:
    """Rotate a plane point into Chebyshev coordinates or back.

    forward: (x1, x2) -> (x1 + x2, x2 - x1); inverse undoes it exactly on
    the rational grid: (y1, y2) -> ((y1 - y2)/2, (y1 + y2)/2).
    """
    p = np.asarray(point, dtype=np.float64)
    if p.shape != (2,):
        raise DimensionError(f"plane point expected, got shape {p.shape}")
    if direction == "forward":
        return np.array([p[0] + p[1], p[1] - p[0]])
    if direction == "inverse":
        return np.array([(p[0] - p[1]) / 2.0, (p[0] + p[1]) / 2.0])
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def _rotated_points(points: np.ndarray) -> np.ndarray:
    return np.stack([points[:, 0] + points[:, 1], points[:, 1] - points[:, 0]], axis=1)


def _strip_diff_bounds(a: float, b: float) -> np.ndarray:
    bounds = np.full((2, 2), BOTTOM)
    bounds[0, 1] = 2.0 * a
    bounds[1, 0] = -2.0 * b
    return bounds


def strip_to_chebyshev(inst: StripInstance) -> ChebyshevInstance:
    """The rotated-coordinate Chebyshev instance equivalent to a strip."""
    return ChebyshevInstance(
        points=_rotated_points(inst.points),
        weights=inst.weights,
        addends=inst.addends,
        caps=inst.caps,
        box_lo=inst.box_lo,
        box_hi=inst.box_hi,
        diff_bounds=_strip_diff_bounds(inst.strip_lo, inst.strip_hi),
    )


def tilted_to_scaled(inst: TiltedStripInstance) -> ScaledChebyshevInstance:
    """The rotated, scaled Chebyshev instance equivalent to a tilted strip."""
    return ScaledChebyshevInstance(
        points=_rotated_points(inst.points),
        weights=inst.weights,
        addends=inst.addends,
        caps=inst.caps,
        box_lo=inst.box_lo,
        box_hi=inst.box_hi,
        diff_bounds=_strip_diff_bounds(inst.strip_lo, inst.strip_hi),
        scale=np.array([inst.slope - 1.0, inst.slope + 1.0]),
    )


def check_feasibility(inst: StripInstance) -> FeasibilityReport:
    """Feasibility certificates of a strip or tilted-strip instance."""
    if isinstance(inst, TiltedStripInstance):
        return _check_chebyshev(tilted_to_scaled(inst))
    return _check_chebyshev(strip_to_chebyshev(inst))


def solve_strip(inst: StripInstance) -> SolutionBox | Infeasible:
    """Optimal value and complete optimal set of a strip instance."""
    if isinstance(inst, TiltedStripInstance):
        raise TypeError("solve_strip expects a plain StripInstance; use solve_tilted")
    result = solve_particular(strip_to_chebyshev(inst))
    if isinstance(result, Infeasible):
        return result
    return replace(result, transform=rotate45_transform())


def solve_tilted(inst: TiltedStripInstance) -> SolutionBox | Infeasible:
    """Optimal value and complete optimal set of a tilted-strip instance."""
    if not isinstance(inst, TiltedStripInstance):
        raise TypeError("solve_tilted expects a TiltedStripInstance; use solve_strip")
    result = solve_scaled(tilted_to_scaled(inst))
    if isinstance(result, Infeasible):
        return result
    return replace(result, transform=rotate_scaled_transform(inst.slope - 1.0, inst.slope + 1.0))


__all__ = [
    "StripInstance",
    "TiltedStripInstance",
    "rotate",
    "strip_to_chebyshev",
    "tilted_to_scaled",
    "check_feasibility",
    "solve_strip",
    "solve_tilted",
]
