"""Objective replay, constraint violations, membership, sampling, verify."""

import dataclasses

import numpy as np
import pytest

from support import (
    tilted_line_instance,
    two_point_instance,
    wide_strip_instance,
)
from tropiloc import (
    ScaledChebyshevInstance,
    constraint_violation,
    is_member,
    objective_value,
    sample,
    solve_particular,
    solve_scaled,
    solve_strip,
    solve_tilted,
    verify,
)
from tropiloc.errors import DimensionError, DomainError
from tropiloc.semiring import BOTTOM
from tropiloc.solutions import objective_batch, violation_batch


def test_objective_values_two_point():
    inst = two_point_instance()
    assert objective_value(inst, [2.0, 0.0]) == 2.0
    assert objective_value(inst, [2.0, 2.0]) == 2.0
    assert objective_value(inst, [0.0, 0.0]) == 4.0


def test_objective_batch_matches_scalar():
    inst = two_point_instance()
    xs = np.array([[2.0, 0.0], [2.0, 2.0], [0.0, 0.0], [-1.0, 3.0]])
    batch = objective_batch(inst, xs)
    assert batch.shape == (4,)
    for row, val in zip(xs, batch):
        assert objective_value(inst, row) == val


def test_objective_rectilinear_uses_d1():
    inst = wide_strip_instance()
    # d1((1,1),(0,0)) = 2, d1((1,1),(2,2)) = 2
    assert objective_value(inst, [1.0, 1.0]) == 2.0
    assert objective_value(inst, [0.0, 0.0]) == 4.0


def test_constraint_violation_box_and_caps():
    inst = two_point_instance()
    assert constraint_violation(inst, [0.0, 0.0]) <= 0.0
    assert constraint_violation(inst, [11.0, 0.0]) == 1.0  # box overshoot
    assert constraint_violation(inst, [0.0, -12.5]) == 2.5
    # caps are 10; standing 11 away from point 2 violates its cap by 1
    assert constraint_violation(inst, [-7.0, 0.0]) == 1.0


def test_constraint_violation_diff_bounds():
    from tropiloc import ChebyshevInstance

    inst = ChebyshevInstance(
        points=[[0.0, 0.0]],
        weights=[1.0],
        addends=[0.0],
        box_lo=[-10.0, -10.0],
        box_hi=[10.0, 10.0],
        diff_bounds=[[BOTTOM, 3.0], [BOTTOM, BOTTOM]],  # x1 >= 3 + x2
    )
    assert constraint_violation(inst, [5.0, 1.0]) <= 0.0
    assert constraint_violation(inst, [2.0, 1.0]) == 2.0  # short by 2


def test_constraint_violation_strip_band():
    inst = wide_strip_instance()
    a, b = inst.strip_lo, inst.strip_hi
    inside = [(a + b) / 2.0, 0.0]
    assert constraint_violation(inst, inside) <= 0.0
    assert constraint_violation(inst, [b + 0.5, 0.0]) == 0.5

    tilted = tilted_line_instance()
    # band is 0 <= 2 x1 - x2 <= 0; at (1, 0) the band term is 2
    assert constraint_violation(tilted, [1.0, 2.0]) <= 0.0
    assert constraint_violation(tilted, [1.0, 0.0]) == 2.0


def test_constraint_violation_scaled_coordinates():
    # scale enters through the difference bounds, which act on y = c * x;
    # caps and objective use the plain distance in original coordinates
    inst = ScaledChebyshevInstance(
        points=[[0.0, 0.0]],
        weights=[1.0],
        addends=[0.0],
        caps=[2.0],
        box_lo=[-3.0, -3.0],
        box_hi=[3.0, 3.0],
        diff_bounds=[[BOTTOM, 0.0], [BOTTOM, BOTTOM]],  # y1 >= y2
        scale=[-2.0, 1.0],
    )
    assert constraint_violation(inst, [-1.0, 1.0]) <= 0.0  # y = (2, 1)
    assert constraint_violation(inst, [1.0, 1.0]) == 3.0  # y = (-2, 1)
    assert constraint_violation(inst, [-1.5, -3.0]) == 1.0  # cap overshoot
    assert objective_value(inst, [-1.0, 1.0]) == 1.0


def test_membership_two_point():
    inst = two_point_instance()
    box = solve_particular(inst)
    for x in sample(box, 8, seed=11):
        assert is_member(box, inst, x)
    assert not is_member(box, inst, [2.5, 0.0])
    assert not is_member(box, inst, [1.0, 0.0])


def test_membership_checks_dimensions():
    inst = two_point_instance()
    box = solve_particular(inst)
    with pytest.raises(DimensionError):
        is_member(box, inst, [1.0, 2.0, 3.0])


def test_sample_vertices_first_and_deterministic():
    inst = two_point_instance()
    box = solve_particular(inst)
    one = sample(box, 1, seed=4)
    assert one.shape == (1, 2)
    assert np.array_equal(one[0], box.vertex_lo)
    two = sample(box, 2, seed=4)
    assert np.array_equal(two[1], box.vertex_hi)
    a = sample(box, 7, seed=9)
    b = sample(box, 7, seed=9)
    assert np.array_equal(a, b)
    c = sample(box, 7, seed=10)
    assert not np.array_equal(a, c)
    with pytest.raises(DomainError):
        sample(box, 0)


def test_sampled_points_are_members_across_variants():
    cases = [
        (two_point_instance(), solve_particular),
        (wide_strip_instance(), solve_strip),
        (tilted_line_instance(), solve_tilted),
    ]
    for inst, solver in cases:
        box = solver(inst)
        for x in sample(box, 9, seed=2):
            assert is_member(box, inst, x)
            assert constraint_violation(inst, x) <= 1e-12


def test_verify_report_fields():
    inst = two_point_instance()
    box = solve_particular(inst)
    rep = verify(box, inst, 10, seed=0)
    assert rep.passed
    assert rep.checked_count == 10
    assert rep.max_objective_deviation <= 1e-9
    assert rep.max_constraint_violation <= 1e-12


def test_verify_catches_tampered_theta():
    inst = two_point_instance()
    box = solve_particular(inst)
    forged = dataclasses.replace(box, theta=box.theta + 0.1)
    rep = verify(forged, inst, 10, seed=0)
    assert not rep.passed
    assert rep.max_objective_deviation >= 0.1 - 1e-12


def test_verify_catches_shifted_box():
    inst = two_point_instance()
    box = solve_particular(inst)
    forged = dataclasses.replace(box, u_lo=box.u_lo + 5.0, u_hi=box.u_hi + 5.0)
    rep = verify(forged, inst, 10, seed=0)
    assert not rep.passed


def test_violation_batch_shape():
    inst = wide_strip_instance()
    xs = np.array([[1.0, 1.0], [150.0, 0.0]])
    v = violation_batch(inst, xs)
    assert v.shape == (2,)
    assert v[0] <= 0.0 and v[1] == 50.0  # strip and rotated box overshoot
