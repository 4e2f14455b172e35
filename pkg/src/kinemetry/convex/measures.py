"""Intrinsic volumes, surface area measures, support functions and Minkowski sums."""

import math

import numpy as np

from ..errors import UnsupportedError, ValidationError
from .bodies import Ball, Polygon, Polytope3, SupportBody2, body_dim
from .regions import TWO_PI, Caps, FullSphere, as_arcs, region_measure

UNIT_TOL = 1e-12


def ball_volume(m):
    """Volume of the unit ``m``-ball, ``pi^(m/2) / Gamma(m/2 + 1)``."""
    return math.pi ** (m / 2) / math.gamma(m / 2 + 1)


def intrinsic_volumes(body):
    """``(mu_0, ..., mu_n)`` of a nonempty convex body in R^2 or R^3."""
    if isinstance(body, Polygon):
        return np.array([1.0, body.perimeter / 2, body.area])
    if isinstance(body, Polytope3):
        mean_width_term = sum(body.edge_length(i) * edge_external_angle(body, i) for i in range(len(body.edges)))
        return np.array([1.0, mean_width_term, body.surface_area / 2, body.volume])
    if isinstance(body, Ball):
        n, r = body.dim, body.radius
        return np.array([math.comb(n, i) * ball_volume(n) / ball_volume(n - i) * r**i for i in range(n + 1)])
    if isinstance(body, SupportBody2):
        m = body.orders.astype(float)
        area = math.pi * body.a0**2 + 0.5 * math.pi * float(((1 - m**2) * (body.cos**2 + body.sin**2)).sum())
        return np.array([1.0, math.pi * body.a0, area])
    body_dim(body)
    raise UnsupportedError(type(body).__name__)


def intrinsic_volumes_by_angles(poly):
    """Intrinsic volumes of a 3D polytope as ``sum_F gamma(F) vol_j(F)`` over j-faces.

    Unlike :func:`intrinsic_volumes` the Euler term is the sum of vertex
    external angles rather than the constant 1, so it validates the angles.
    """
    verts = sum(vertex_external_angle(poly, i) for i in range(len(poly.vertices)))
    edges = sum(poly.edge_length(i) * edge_external_angle(poly, i) for i in range(len(poly.edges)))
    facets = sum(0.5 * a for a in poly.face_areas)
    return np.array([verts, edges, facets, poly.volume])


def edge_external_angle(poly, i):
    """``(pi - dihedral) / 2pi``: the angle between adjacent outward normals over 2pi."""
    f, g = poly.edge_faces[i]
    n1, n2 = poly.normals[f], poly.normals[g]
    return math.atan2(np.linalg.norm(np.cross(n1, n2)), float(n1 @ n2)) / TWO_PI


def vertex_external_angle(poly, i):
    """Normal-cone solid angle at vertex ``i`` over 4pi, by Girard's spherical excess."""
    fs = [fi for fi, f in enumerate(poly.faces) if i in f]
    normals = poly.normals[fs]
    axis = normals.sum(axis=0)
    axis /= np.linalg.norm(axis)
    ref = normals[0] - (normals[0] @ axis) * axis
    ref /= np.linalg.norm(ref)
    other = np.cross(axis, ref)
    order = np.argsort(np.arctan2(normals @ other, normals @ ref))
    ring = normals[order]
    k = len(ring)
    interior = 0.0
    for j in range(k):
        p, c, nx = ring[j - 1], ring[j], ring[(j + 1) % k]
        t1 = p - (p @ c) * c
        t2 = nx - (nx @ c) * c
        interior += math.atan2(np.linalg.norm(np.cross(t1, t2)), float(t1 @ t2))
    excess = interior - (k - 2) * math.pi
    return excess / (4 * math.pi)


def external_angle_3d(poly, kind, index):
    """Normalized external angle of a facet, edge or vertex of ``poly``.

    ``kind`` is ``"facet"``, ``"edge"``, ``"vertex"`` or ``"body"``; for edges
    ``index`` may be a position in ``poly.edges`` or a vertex pair.
    """
    if kind == "body":
        return 1.0
    if kind == "facet":
        if not 0 <= index < len(poly.faces):
            raise ValidationError(f"no facet {index}")
        return 0.5
    if kind == "edge":
        if isinstance(index, tuple):
            key = tuple(sorted(index))
            if key not in poly.edges:
                raise ValidationError(f"no edge {index}")
            index = poly.edges.index(key)
        if not 0 <= index < len(poly.edges):
            raise ValidationError(f"no edge {index}")
        return edge_external_angle(poly, index)
    if kind == "vertex":
        if not 0 <= index < len(poly.vertices):
            raise ValidationError(f"no vertex {index}")
        return vertex_external_angle(poly, index)
    raise ValidationError(f"unknown face kind {kind!r}")


def _arc_integral_curvature_radius(a0, a, b, region):
    """Exact ``int_region (h + h'') dtheta`` for a trigonometric support function."""
    m = np.arange(1, len(a) + 1, dtype=float)
    w = 1.0 - m**2
    total = 0.0
    for lo, hi in as_arcs(region).bounds():
        total += a0 * (hi - lo)
        if len(m):
            total += float((w * (a * (np.sin(m * hi) - np.sin(m * lo)) - b * (np.cos(m * hi) - np.cos(m * lo))) / m).sum())
    return total


def surface_area_measure(body, region):
    """``S_{n-1}(body, region)`` for a full-dimensional body."""
    if isinstance(body, Polygon):
        inside = as_arcs(region).contains(body.normal_angles)
        return float(body.edge_lengths[inside].sum())
    if isinstance(body, SupportBody2):
        return _arc_integral_curvature_radius(body.a0, body.cos, body.sin, region)
    if isinstance(body, Ball):
        if body.radius <= 0:
            raise UnsupportedError("surface area measure of a point")
        return body.radius ** (body.dim - 1) * region_measure(region, body.dim)
    if isinstance(body, Polytope3):
        if isinstance(region, FullSphere):
            return body.surface_area
        if not isinstance(region, Caps):
            raise ValidationError("polytope regions must be caps or the full sphere")
        return float(body.face_areas[region.contains(body.normals)].sum())
    body_dim(body)
    raise UnsupportedError(type(body).__name__)


def support_eval(body, u):
    """``h_K(u) = max_{x in K} <x, u>`` for a unit vector ``u``."""
    u = np.asarray(u, dtype=float)
    if u.shape != (body_dim(body),):
        raise ValidationError("direction dimension does not match the body")
    if abs(np.linalg.norm(u) - 1.0) > UNIT_TOL:
        raise ValidationError("direction must be a unit vector")
    if isinstance(body, (Polygon, Polytope3)):
        return float((body.vertices @ u).max())
    if isinstance(body, Ball):
        return float(body.center @ u) + body.radius
    return float(body.support(math.atan2(u[1], u[0])))


def minkowski_sum_2d(k, l):
    """Minkowski sum of two convex polygons by merging edges sorted by normal angle."""
    if not (isinstance(k, Polygon) and isinstance(l, Polygon)):
        raise ValidationError("minkowski_sum_2d needs two polygons")

    def start_and_edges(p):
        v = p.vertices
        i0 = min(range(len(v)), key=lambda i: (v[i, 1], v[i, 0]))
        v = np.roll(v, -i0, axis=0)
        return v[0], np.roll(v, -1, axis=0) - v

    s1, e1 = start_and_edges(k)
    s2, e2 = start_and_edges(l)
    edges = np.vstack([e1, e2])
    ang = np.mod(np.arctan2(edges[:, 1], edges[:, 0]), TWO_PI)
    edges = edges[np.argsort(ang, kind="stable")]
    def parallel(a, b):
        return abs(a[0] * b[1] - a[1] * b[0]) <= 1e-12 * np.hypot(*a) * np.hypot(*b) and a @ b > 0

    merged = [edges[0].copy()]
    for e in edges[1:]:
        if parallel(merged[-1], e):
            merged[-1] = merged[-1] + e
        else:
            merged.append(e.copy())
    start = s1 + s2
    # an edge sorted just below 2pi may continue the first edge
    if len(merged) > 1 and parallel(merged[-1], merged[0]):
        last = merged.pop()
        start = start - last
        merged[0] = merged[0] + last
    verts = start + np.vstack([np.zeros(2), np.cumsum(merged[:-1], axis=0)])
    return Polygon(verts)


def reflect(body):
    """Point reflection ``-K``."""
    return body.reflected()
