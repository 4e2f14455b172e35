import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from kinemetry.convex import (
    FULL, Arcs, Ball, Caps, Polygon, Polytope3, SupportBody2, external_angle_3d, intrinsic_volumes,
    intrinsic_volumes_by_angles, minkowski_sum_2d, reflect, region_measure, support_eval, surface_area_measure,
)
from kinemetry.convex.motion import RigidMotion, euler_intersects
from kinemetry.errors import ValidationError


def rot2(phi):
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[c, -s], [s, c]])


def random_rotation3(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    return q if np.linalg.det(q) > 0 else -q


# ---------------------------------------------------------------- intrinsic volumes

def test_unit_square_volumes(square):
    np.testing.assert_allclose(intrinsic_volumes(square), (1, 2, 1), rtol=1e-12)


def test_unit_cube_volumes(cube):
    np.testing.assert_allclose(intrinsic_volumes(cube), (1, 3, 3, 1), rtol=1e-12)


def test_unit_ball_volumes(ball3):
    np.testing.assert_allclose(intrinsic_volumes(ball3), (1, 4, 2 * math.pi, 4 * math.pi / 3), rtol=1e-12)


def test_disk_and_support_body_agree(disk):
    np.testing.assert_allclose(intrinsic_volumes(disk), intrinsic_volumes(disk.as_support2()), rtol=1e-14)
    np.testing.assert_allclose(intrinsic_volumes(disk), (1, math.pi, math.pi), rtol=1e-14)


def test_support_body_area_matches_boundary_polygon(blob):
    # independent oracle: area of a fine inscribed polygon through boundary points
    t = np.linspace(0, 2 * math.pi, 20001)[:-1]
    pts = blob.boundary_point(t)
    x, y = pts[:, 0], pts[:, 1]
    shoelace = 0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
    perim = np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1).sum()
    mu = intrinsic_volumes(blob)
    assert mu[2] == pytest.approx(shoelace, rel=1e-7)
    assert mu[1] == pytest.approx(perim / 2, rel=1e-7)


def test_cube_external_angles(cube):
    assert external_angle_3d(cube, "facet", 0) == 0.5
    for i in range(len(cube.edges)):
        assert external_angle_3d(cube, "edge", i) == pytest.approx(0.25, abs=1e-15)
    for i in range(8):
        assert external_angle_3d(cube, "vertex", i) == pytest.approx(0.125, abs=1e-14)
    np.testing.assert_allclose(intrinsic_volumes_by_angles(cube), (1, 3, 3, 1), atol=1e-12)


def test_external_angle_errors(cube):
    with pytest.raises(ValidationError):
        external_angle_3d(cube, "vertex", 8)
    with pytest.raises(ValidationError):
        external_angle_3d(cube, "edge", (0, 6))
    with pytest.raises(ValidationError):
        external_angle_3d(cube, "ridge", 0)
    assert external_angle_3d(cube, "edge", cube.edges[3]) == pytest.approx(0.25)


def test_random_polytope_angle_decomposition():
    rng = np.random.default_rng(3)
    poly = Polytope3.from_points(rng.normal(size=(40, 3)))
    by_angles = intrinsic_volumes_by_angles(poly)
    assert by_angles[0] == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(by_angles, intrinsic_volumes(poly), rtol=1e-12)
    hull = ConvexHull(poly.vertices)
    assert poly.volume == pytest.approx(hull.volume, rel=1e-12)
    assert poly.surface_area == pytest.approx(hull.area, rel=1e-12)


def test_tetrahedron_mean_width_term():
    # regular tetrahedron of edge a: mu_1 = 6 a (pi - arccos(1/3)) / (2 pi)
    v = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
    poly = Polytope3.from_points(v)
    a = 2 * math.sqrt(2)
    expected = 6 * a * (math.pi - math.acos(1 / 3)) / (2 * math.pi)
    assert intrinsic_volumes(poly)[1] == pytest.approx(expected, rel=1e-13)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_rigid_motion_invariance(seed):
    rng = np.random.default_rng(seed)
    poly2 = random_polygon(rng, 12)
    poly3 = Polytope3.from_points(rng.normal(size=(15, 3)))
    r2, t2 = rot2(rng.uniform(0, 2 * math.pi)), rng.normal(size=2) * 5
    r3, t3 = random_rotation3(rng), rng.normal(size=3) * 5
    for body, moved in ((poly2, poly2.transformed(r2, t2)), (poly3, poly3.transformed(r3, t3))):
        a, b = intrinsic_volumes(body), intrinsic_volumes(moved)
        assert np.all(np.abs(a - b) <= 1e-9 * (1 + np.abs(a)))


# ---------------------------------------------------------------- validation

def test_polygon_validation():
    with pytest.raises(ValidationError):
        Polygon([[0, 0], [1, 0]])
    with pytest.raises(ValidationError):
        Polygon([[0, 0], [1, 1], [1, 0], [0, 1]])  # self-intersecting
    with pytest.raises(ValidationError):
        Polygon([[0, 0], [1, 0], [2, 0], [1, 1]])  # collinear vertex
    with pytest.raises(ValidationError):
        Polygon([[0, 0], [0, 1], [1, 1], [1, 0]])  # clockwise


def test_polytope_validation(cube):
    faces = [list(f) for f in cube.faces]
    faces[0] = faces[0][::-1]
    with pytest.raises(ValidationError):
        Polytope3(cube.vertices, faces)
    with pytest.raises(ValidationError):
        Polytope3(cube.vertices, [list(f) for f in cube.faces[:-1]])


def test_support_body_validation():
    with pytest.raises(ValidationError):
        SupportBody2(1.0, [0.0, 0.5])  # h + h'' = 1 - 1.5 cos 2t changes sign
    with pytest.raises(ValidationError):
        SupportBody2(1.0, [0.0] * 65)
    with pytest.raises(ValidationError):
        Ball([0.0, 0.0], -1.0)


def test_rigid_motion_validation():
    with pytest.raises(ValidationError):
        RigidMotion(np.array([[1.0, 0.0], [0.0, -1.0]]), np.zeros(2))
    with pytest.raises(ValidationError):
        RigidMotion(np.array([[1.0, 1e-6], [0.0, 1.0]]), np.zeros(2))


# ---------------------------------------------------------------- regions and area measures

def test_arcs_normalization_and_errors():
    a = Arcs([(-0.5, 0.5)])
    assert a.measure == pytest.approx(1.0)
    assert a.contains(np.array([0.0, 2 * math.pi - 0.25, 0.6])).tolist() == [True, True, False]
    with pytest.raises(ValidationError):
        Arcs([(0, 1), (0.5, 2)])
    with pytest.raises(ValidationError):
        Arcs([(1, 1)])
    assert Arcs.full().measure == pytest.approx(2 * math.pi)
    assert Arcs().is_empty


def test_square_surface_measure(square):
    assert surface_area_measure(square, FULL) == pytest.approx(4.0)
    assert surface_area_measure(square, Arcs([(-math.pi / 4, math.pi / 4)])) == pytest.approx(1.0)
    assert surface_area_measure(square, Arcs([(0.1, 1.0)])) == 0.0


def test_ball_surface_measure(ball3, disk):
    assert surface_area_measure(ball3, FULL) == pytest.approx(4 * math.pi)
    cap = Caps([((0, 0, 1), math.pi / 2)])
    assert surface_area_measure(ball3, cap) == pytest.approx(2 * math.pi)
    assert surface_area_measure(disk, Arcs([(0, 1.5)])) == pytest.approx(1.5)


def test_cube_surface_measure_on_caps(cube):
    caps = Caps([((0, 0, 1), 0.1), ((1, 0, 0), 0.1)])
    assert surface_area_measure(cube, caps) == pytest.approx(2.0)
    assert region_measure(caps, 3) == pytest.approx(2 * 2 * math.pi * (1 - math.cos(0.1)))


def test_smooth_surface_measure_matches_quadrature(blob):
    lo, hi = 0.4, 2.9
    t = np.linspace(lo, hi, 200001)
    radius = blob.radius_of_curvature(t)
    quad = np.trapezoid(radius, t)
    assert surface_area_measure(blob, Arcs([(lo, hi)])) == pytest.approx(quad, rel=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 6), st.floats(0.05, 2), st.floats(0.05, 2), st.floats(0.01, 1))
def test_area_measure_region_additivity(start, len1, len2, gap):
    body = SupportBody2(1.0, [0.1, 0.05, 0.01], [0.0, 0.02])
    poly = Polygon.regular(9, phase=0.3)
    u1 = Arcs([(start, start + len1)])
    u2 = Arcs([(start + len1 + gap, start + len1 + gap + len2)])
    both = Arcs([(start, start + len1), (start + len1 + gap, start + len1 + gap + len2)])
    for k in (body, poly):
        total = surface_area_measure(k, u1) + surface_area_measure(k, u2)
        assert surface_area_measure(k, both) == pytest.approx(total, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 2 * math.pi), st.floats(0, 6), st.floats(0.1, 3))
def test_area_measure_equivariance(phi, start, length):
    body = SupportBody2(1.0, [0.1, 0.05, 0.01], [0.0, 0.02])
    poly = Polygon.regular(5, phase=0.2)
    u = Arcs([(start, start + length)])
    assert surface_area_measure(body.rotated(phi), u.rotated(phi)) == pytest.approx(
        surface_area_measure(body, u), abs=1e-9)
    assert surface_area_measure(poly.transformed(rot2(phi), np.zeros(2)), Arcs([(start + phi + 0.013, start + phi + length + 0.013)])) \
        == pytest.approx(surface_area_measure(poly, Arcs([(start + 0.013, start + length + 0.013)])), abs=1e-9)


def test_globalization(square, cube, ball3, blob):
    for body in (square, cube, ball3, blob):
        mu = intrinsic_volumes(body)
        assert surface_area_measure(body, FULL) == pytest.approx(2 * mu[-2], rel=1e-10)


# ---------------------------------------------------------------- support and Minkowski sums

def test_support_eval(square, ball3):
    assert support_eval(square, [1.0, 0.0]) == 1.0
    assert support_eval(square, [-1.0, 0.0]) == 0.0
    assert support_eval(ball3, [0.0, 0.0, 1.0]) == 1.0
    with pytest.raises(ValidationError):
        support_eval(square, [1.0, 1.0])
    with pytest.raises(ValidationError):
        support_eval(square, [1.0, 0.0, 0.0])


def test_support_body_support_matches_boundary(blob):
    t = np.linspace(0, 2 * math.pi, 50)
    for theta in t:
        u = np.array([math.cos(theta), math.sin(theta)])
        assert support_eval(blob, u) == pytest.approx(float(blob.boundary_point(theta) @ u), abs=1e-12)


def hull_of_sums(k, l):
    pts = (k.vertices[:, None, :] + l.vertices[None, :, :]).reshape(-1, 2)
    hull = ConvexHull(pts)
    return hull.volume, len(hull.vertices)


def test_square_plus_rotated_square_is_octagon(square):
    diamond = square.transformed(rot2(math.pi / 4), np.zeros(2))
    octagon = minkowski_sum_2d(square, diamond)
    area, count = hull_of_sums(square, diamond)
    assert len(octagon.vertices) == 8 == count
    assert octagon.perimeter == pytest.approx(8.0)
    assert octagon.area == pytest.approx(area, rel=1e-14)
    assert octagon.area == pytest.approx(2 + 2 * math.sqrt(2), rel=1e-14)


def random_polygon(rng, n):
    pts = rng.normal(size=(n, 2))
    hull = ConvexHull(pts)
    return Polygon(pts[hull.vertices])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 9), st.integers(3, 9))
def test_minkowski_sum_properties(seed, n1, n2):
    rng = np.random.default_rng(seed)
    k, l = random_polygon(rng, n1), random_polygon(rng, n2)
    s = minkowski_sum_2d(k, l)
    area, _ = hull_of_sums(k, l)
    assert s.area == pytest.approx(area, rel=1e-10)
    mk, ml, ms = intrinsic_volumes(k), intrinsic_volumes(l), intrinsic_volumes(s)
    assert ms[1] == pytest.approx(mk[1] + ml[1], rel=1e-10)
    mixed_kl = s.area - k.area - l.area
    mixed_lk = minkowski_sum_2d(l, k).area - l.area - k.area
    assert mixed_kl == pytest.approx(mixed_lk, rel=1e-10)
    lo = rng.uniform(0, 6)
    u = Arcs([(lo, lo + rng.uniform(0.1, 6))])
    assert surface_area_measure(s, u) == pytest.approx(surface_area_measure(k, u) + surface_area_measure(l, u), abs=1e-10)


def test_reflection(square, blob):
    r = reflect(square)
    assert r.area == pytest.approx(1.0)
    assert support_eval(r, [1.0, 0.0]) == 0.0
    rb = reflect(blob)
    for theta in np.linspace(0, 6, 13):
        assert rb.support(theta) == pytest.approx(blob.support(theta + math.pi), abs=1e-14)


# ---------------------------------------------------------------- single intersection queries

def test_euler_intersects_examples(disk, square, backend):
    assert euler_intersects(disk, disk, RigidMotion.planar(0.0, (1.9, 0.0))) == 1
    assert euler_intersects(disk, disk, RigidMotion.planar(0.0, (2.1, 0.0))) == 0
    assert euler_intersects(square, square, RigidMotion.planar(0.0, (1.0, 0.0))) == 1
    assert euler_intersects(square, square, RigidMotion.planar(0.0, (1.0 + 1e-6, 0.0))) == 0


def test_euler_intersects_3d(cube, ball3, backend):
    assert euler_intersects(cube, ball3, RigidMotion(np.eye(3), (-0.5, 0.5, 0.5))) == 1
    assert euler_intersects(cube, ball3, RigidMotion(np.eye(3), (-0.7, -0.7, -0.7))) == 0
    assert euler_intersects(cube, cube, RigidMotion(np.eye(3), (1.0, 1.0, 1.0))) == 1
    assert euler_intersects(cube, cube, RigidMotion(np.eye(3), (1.0, 1.0, 1.001))) == 0
