"""Solution boxes: parametric solution sets with a coordinate transform.

A solver returns the complete optimal set as ``x = T(generator (x) u)`` over
a parameter box ``u_lo <= u <= u_hi``, where the tropical part lives in
internal coordinates and ``T`` maps back to the problem's original
coordinates.  Four transforms cover all variants:

* identity        -- plain Chebyshev problems;
* scale(c)        -- internal y_i = c_i * x_i (axis-scaled constraints);
* rotate45        -- internal y = (x1 + x2, x2 - x1), which turns the
                     rectilinear plane metric into the Chebyshev one;
* rotate_scaled   -- rotate45 followed by scale((c1, c2)), for tilted strips.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .semiring import mat_vec

IDENTITY = "identity"
SCALE = "scale"
ROTATE45 = "rotate45"
ROTATE_SCALED = "rotate_scaled"


@dataclass(frozen=True, eq=False)
class Transform:
    kind: str
    coeffs: tuple[float, ...] = ()

    def to_original(self, y) -> np.ndarray:
        """Map a point from internal solver coordinates back to the original."""
        y = np.asarray(y, dtype=np.float64)
        if self.kind == IDENTITY:
            return y
        if self.kind == SCALE:
            return y / np.asarray(self.coeffs)
        if self.kind == ROTATE45:
            self._expect_plane(y)
            return np.array([(y[0] - y[1]) / 2.0, (y[0] + y[1]) / 2.0])
        if self.kind == ROTATE_SCALED:
            self._expect_plane(y)
            c1, c2 = self.coeffs
            u, v = y[0] / c1, y[1] / c2
            return np.array([(u - v) / 2.0, (u + v) / 2.0])
        raise ValueError(f"unknown transform kind {self.kind!r}")

    def to_internal(self, x) -> np.ndarray:
        """Map a point from original coordinates into solver coordinates."""
        x = np.asarray(x, dtype=np.float64)
        if self.kind == IDENTITY:
            return x
        if self.kind == SCALE:
            return x * np.asarray(self.coeffs)
        if self.kind == ROTATE45:
            self._expect_plane(x)
            return np.array([x[0] + x[1], x[1] - x[0]])
        if self.kind == ROTATE_SCALED:
            self._expect_plane(x)
            c1, c2 = self.coeffs
            return np.array([c1 * (x[0] + x[1]), c2 * (x[1] - x[0])])
        raise ValueError(f"unknown transform kind {self.kind!r}")

    @staticmethod
    def _expect_plane(v) -> None:
        if v.shape != (2,):
            raise DimensionError(f"planar point expected, got shape {v.shape}")


def identity_transform() -> Transform:
    return Transform(IDENTITY)


def scale_transform(c) -> Transform:
    return Transform(SCALE, tuple(float(v) for v in np.asarray(c).ravel()))


def rotate45_transform() -> Transform:
    return Transform(ROTATE45)


def rotate_scaled_transform(c1: float, c2: float) -> Transform:
    return Transform(ROTATE_SCALED, (float(c1), float(c2)))


@dataclass(frozen=True, eq=False)
class SolutionBox:
    """The complete optimal solution set of a location instance.

    theta is the optimal objective value; every member attains it.  Members
    are ``transform.to_original(generator (x) u)`` for ``u_lo <= u <= u_hi``.
    The box may be degenerate (u_lo == u_hi: a unique solution).
    """

    theta: float
    generator: np.ndarray
    u_lo: np.ndarray
    u_hi: np.ndarray
    transform: Transform

    def member(self, u) -> np.ndarray:
        """Original-coordinate solution for a parameter vector u."""
        return self.transform.to_original(mat_vec(self.generator, np.asarray(u, dtype=np.float64)))

    @property
    def vertex_lo(self) -> np.ndarray:
        return self.member(self.u_lo)

    @property
    def vertex_hi(self) -> np.ndarray:
        return self.member(self.u_hi)


__all__ = [
    "Transform",
    "SolutionBox",
    "identity_transform",
    "scale_transform",
    "rotate45_transform",
    "rotate_scaled_transform",
    "IDENTITY",
    "SCALE",
    "ROTATE45",
    "ROTATE_SCALED",
]
