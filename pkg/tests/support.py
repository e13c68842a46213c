"""Shared test data builders.

Random numeric data is dyadic (integer / 8, magnitudes well under 2**20) so
every float addition in the code under test is exact and equality checks are
meaningful.  The frozen example instances were each confirmed against the
grid oracle before their values were pinned in the tests.
"""

import numpy as np

from tropiloc import ChebyshevInstance, StripInstance, TiltedStripInstance
from tropiloc.semiring import BOTTOM

DY_LIMIT = 2**20


def dyadic(rng, shape=None, limit=DY_LIMIT):
    """Dyadic floats k/8 with |k| <= limit; exact under addition."""
    return rng.integers(-limit, limit + 1, shape).astype(np.float64) / 8.0


def dyadic_with_bottom(rng, shape, p_bottom=0.15, limit=2**16):
    out = dyadic(rng, shape, limit)
    mask = rng.random(shape) < p_bottom
    out[mask] = BOTTOM
    return out


def nonpos_cycle_matrix(rng, n, density=0.5, limit=64):
    """Random matrix with Tr <= 0, built from a potential so cycle sums
    telescope to -(slack sum) <= 0 exactly (dyadic entries)."""
    a = np.full((n, n), BOTTOM)
    phi = rng.integers(-limit, limit + 1, n).astype(np.float64) / 8.0
    for i in range(n):
        for k in range(n):
            if rng.random() < density:
                slack = rng.integers(0, 17) / 8.0
                a[i, k] = phi[i] - phi[k] - slack
    return a


B2 = np.full((2, 2), BOTTOM)
B1 = np.full((1, 1), BOTTOM)


def two_point_instance():
    # oracle-confirmed: theta = 2
    return ChebyshevInstance(
        points=[[0.0, 0.0], [4.0, 0.0]],
        weights=[1.0, 1.0],
        addends=[0.0, 0.0],
        caps=[10.0, 10.0],
        box_lo=[-10.0, -10.0],
        box_hi=[10.0, 10.0],
        diff_bounds=B2,
    )


def clipped_variant_instance():
    # two_point_instance with upper box (1, 10); oracle-confirmed theta = 3
    return ChebyshevInstance(
        points=[[0.0, 0.0], [4.0, 0.0]],
        weights=[1.0, 1.0],
        addends=[0.0, 0.0],
        caps=[10.0, 10.0],
        box_lo=[-10.0, -10.0],
        box_hi=[1.0, 10.0],
        diff_bounds=B2,
    )


def tight_caps_instance():
    # infeasible on the line: caps of 1 around 0 and 10; bounds gap 8
    return ChebyshevInstance(
        points=[[0.0], [10.0]],
        weights=[1.0, 1.0],
        addends=[0.0, 0.0],
        caps=[1.0, 1.0],
        box_lo=[-100.0],
        box_hi=[100.0],
        diff_bounds=B1,
    )


def degenerate_strip_instance():
    # strip pinched to the line x1 = 0; oracle-confirmed theta = 4 at (0, 0)
    return StripInstance(
        points=[[0.0, 0.0], [4.0, 0.0]],
        weights=[1.0, 1.0],
        addends=[0.0, 0.0],
        box_lo=[-100.0, -100.0],
        box_hi=[100.0, 100.0],
        strip_lo=0.0,
        strip_hi=0.0,
    )


def wide_strip_instance():
    # non-binding strip; oracle-confirmed theta = 2
    return StripInstance(
        points=[[0.0, 0.0], [2.0, 2.0]],
        weights=[1.0, 1.0],
        addends=[0.0, 0.0],
        box_lo=[-100.0, -100.0],
        box_hi=[100.0, 100.0],
        strip_lo=-100.0,
        strip_hi=100.0,
    )


def tilted_line_instance():
    # constrained to x2 = 2*x1; oracle-confirmed theta = 3 at (1, 2)
    return TiltedStripInstance(
        points=[[0.0, 0.0], [0.0, 4.0]],
        weights=[1.0, 1.0],
        addends=[0.0, 0.0],
        box_lo=[-100.0, -100.0],
        box_hi=[100.0, 100.0],
        strip_lo=0.0,
        strip_hi=0.0,
        slope=2.0,
    )
