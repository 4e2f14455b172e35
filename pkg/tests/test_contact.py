from fractions import Fraction
import math

import numpy as np
import pytest

from kinemetry.contact import (
    CurvatureField2, IsotropyAverage, bridge_residual, contact_coefficient_balls_3d, contact_measure_2d,
    contact_measure_balls_3d,
)
from kinemetry.convex import FULL, Arcs, Ball, SupportBody2, surface_area_measure
from kinemetry.errors import ValidationError
from kinemetry.kinematic.estimators import local_additive_oracle_2d

HALF = Arcs([(0.0, math.pi)])
ASYM = SupportBody2(1.0, [0.2, 0.0, 0.1])  # h = 1 + 0.2 cos t + 0.1 cos 3t


def test_unit_disks(disk):
    assert contact_measure_2d(disk, FULL, disk, FULL) == pytest.approx(4 * math.pi, rel=1e-14)
    assert contact_measure_2d(disk, HALF, disk, FULL) == pytest.approx(2 * math.pi, rel=1e-14)


@pytest.mark.parametrize("ra,rb", [(1.0, 1.0), (0.5, 2.0), (3.0, 0.25)])
def test_disk_radii(ra, rb):
    a, b = Ball([0.0, 0.0], ra), Ball([1.0, -2.0], rb)
    assert contact_measure_2d(a, FULL, b, FULL) == pytest.approx(2 * math.pi * (ra + rb), rel=1e-14)


def test_empty_region_gives_zero(disk):
    assert contact_measure_2d(disk, Arcs(), disk, FULL) == 0.0


def test_curvature_field():
    field = CurvatureField2(ASYM)
    t = np.linspace(0, 2 * math.pi, 9)
    np.testing.assert_allclose(field.radius(t), 1 - 0.8 * np.cos(3 * t), atol=1e-14)
    np.testing.assert_allclose(field.curvature(t) * field.radius(t), 1.0)
    assert CurvatureField2(Ball([0.0, 0.0], 2.0)).radius(0.3) == pytest.approx(2.0)


def test_curvature_field_rejects_nonsmooth(square):
    with pytest.raises(ValidationError):
        CurvatureField2(square)
    with pytest.raises(ValidationError):
        CurvatureField2(Ball([0.0, 0.0], 0.0))


def test_isotropy_average():
    assert IsotropyAverage(2).group == "trivial"
    iso = IsotropyAverage(3)
    assert iso.average(lambda a: math.cos(a) ** 2) == pytest.approx(0.5, abs=1e-14)
    with pytest.raises(ValidationError):
        IsotropyAverage(3, mass=2.0)


BRIDGE_CASES = [
    (ASYM, FULL, Ball([0.0, 0.0], 1.0), FULL),
    (ASYM, Arcs([(0.3, 2.0)]), Ball([0.0, 0.0], 1.0), Arcs([(1.0, 4.0)])),
    (ASYM, HALF, SupportBody2(0.8, [0.0, 0.05], [0.1, 0.0, 0.02]), Arcs([(1.0, 4.0), (5.0, 6.0)])),
    (SupportBody2(1.2, [0.0, 0.1, 0.0, 0.02], [0.05]), Arcs([(5.5, 7.0)]), ASYM.rotated(0.7), HALF),
    (Ball([0.3, 0.1], 0.5), Arcs([(2.0, 2.5)]), ASYM, FULL),
    (SupportBody2(1.0, [], [0.0, 0.0, 0.05]), Arcs([(0.1, 0.2), (3.0, 5.0)]), SupportBody2(2.0, [0.3, 0.1]), Arcs([(4.0, 9.0)])),
]


@pytest.mark.parametrize("case", range(len(BRIDGE_CASES)))
def test_contact_bridge(case):
    k, u, l, v = BRIDGE_CASES[case]
    assert bridge_residual(k, u, l, v) <= 1e-10


def test_bridge_uses_reflected_body():
    # S_1(-L, -V) = S_1(L, V) with a nontrivial region, computed independently
    l, v = ASYM, Arcs([(0.5, 2.0)])
    t = np.linspace(0.5, 2.0, 200001)
    direct = np.trapezoid(l.radius_of_curvature(t), t)
    assert surface_area_measure(l.reflected(), v.antipodal()) == pytest.approx(direct, rel=1e-9)
    lhs = contact_measure_2d(ASYM, HALF, l, v)
    assert lhs == pytest.approx(local_additive_oracle_2d(ASYM, HALF, l.reflected(), v.antipodal()), abs=1e-12)


@pytest.mark.parametrize("a,b,coef", [(1, 1, 16), (2, 1, 36), (1, Fraction(1, 10**6), Fraction(1000001, 10**6) ** 2 * 4)])
def test_ball_contact_exact(a, b, coef):
    assert contact_coefficient_balls_3d(a, b) == coef
    assert contact_coefficient_balls_3d(a, b) == 4 * (Fraction(a) + Fraction(b)) ** 2


def test_ball_contact_matches_sphere_area():
    for a, b in ((1, 1), (2, 1), (1, 1e-6)):
        s2 = surface_area_measure(Ball([0.0, 0.0, 0.0], a + b), FULL)
        assert contact_measure_balls_3d(a, b) == pytest.approx(s2, rel=1e-14)
    assert contact_measure_balls_3d(1, 1e-12) == pytest.approx(4 * math.pi, rel=1e-11)


def test_ball_contact_errors():
    with pytest.raises(ValidationError):
        contact_coefficient_balls_3d(0, 1)
    with pytest.raises(ValidationError):
        contact_coefficient_balls_3d(1, float("inf"))
