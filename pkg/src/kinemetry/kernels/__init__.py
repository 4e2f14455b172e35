"""Batched intersection and separation queries for pairs of convex bodies.

The motion ``g = (R, t)`` acts on the second body: ``gB = R B + t``.  In 2D
rotations are passed as angles, in 3D as ``(S, 3, 3)`` matrices.  The
backend (numba loops or vectorized numpy) is chosen by
:func:`kinemetry._accel.backend` on every call.
"""

import numpy as np

from .. import _accel
from ..convex.bodies import Ball, Polygon, Polytope3, SupportBody2
from ..errors import UnsupportedError, ValidationError
from . import _jit, _vec

INTERSECT_TOL = 1e-10

KIND_POLYGON, KIND_DISK, KIND_SUPPORT = 0, 1, 2


def _impl():
    return _jit if _accel.backend() == "numba" else _vec


def support_record(body):
    """``(kind, params)`` encoding of a planar body for the generic search."""
    if isinstance(body, Polygon):
        return KIND_POLYGON, np.ascontiguousarray(body.vertices.reshape(-1))
    if isinstance(body, Ball) and body.dim == 2:
        return KIND_DISK, np.array([body.center[0], body.center[1], body.radius])
    if isinstance(body, SupportBody2):
        return KIND_SUPPORT, np.concatenate([[body.a0, body.degree], body.cos, body.sin])
    raise UnsupportedError(f"no planar support record for {type(body).__name__}")


def polytope_arrays(p):
    faces = np.full((len(p.faces), max(len(f) for f in p.faces)), -1, dtype=np.int64)
    for i, f in enumerate(p.faces):
        faces[i, :len(f)] = f
    face_len = np.array([len(f) for f in p.faces], dtype=np.int64)
    edges = np.array(p.edges, dtype=np.int64)
    return (np.ascontiguousarray(p.vertices), np.ascontiguousarray(p.normals),
            np.ascontiguousarray(p.offsets), edges, faces, face_len)


def _edge_directions(p):
    v = p.vertices
    e = np.array([v[b] - v[a] for a, b in p.edges])
    return e / np.linalg.norm(e, axis=1)[:, None]


def separation_2d(a, b, phi, tx, ty):
    """``(fmin, theta)``: min of ``h_A(u) + h_{gB}(-u)`` and the minimizing normal angle.

    ``-fmin`` is the distance between disjoint bodies and ``theta`` the
    direction from the closest point of A to the closest point of gB.
    """
    impl = _impl()
    phi, tx, ty = (np.ascontiguousarray(x, dtype=float) for x in (phi, tx, ty))
    if isinstance(a, Ball) and isinstance(b, Ball):
        return impl.disk_disk_separation(a.center, a.radius, b.center, b.radius, phi, tx, ty)
    ka, pa = support_record(a)
    kb, pb = support_record(b)
    return impl.separation_search(ka, pa, kb, pb, phi, tx, ty)


def hits_2d(a, b, phi, tx, ty, tol=INTERSECT_TOL):
    impl = _impl()
    phi, tx, ty = (np.ascontiguousarray(x, dtype=float) for x in (phi, tx, ty))
    if isinstance(a, Polygon) and isinstance(b, Polygon):
        return impl.poly_poly_hits(a.vertices, b.vertices, phi, tx, ty, tol)
    if isinstance(a, Polygon) and isinstance(b, Ball):
        return impl.poly_disk_hits(a.vertices, b.center, b.radius, phi, tx, ty, 0, tol)
    if isinstance(a, Ball) and isinstance(b, Polygon):
        return impl.poly_disk_hits(b.vertices, a.center, a.radius, phi, tx, ty, 1, tol)
    fmin, _ = separation_2d(a, b, phi, tx, ty)
    return (fmin >= -tol).astype(np.uint8)


def hits_3d(a, b, rot, t, tol=INTERSECT_TOL):
    impl = _impl()
    rot = np.ascontiguousarray(rot, dtype=float)
    t = np.ascontiguousarray(t, dtype=float)
    if isinstance(a, Ball) and isinstance(b, Ball):
        return impl.ball_ball_hits(a.center, a.radius, b.center, b.radius, rot, t, tol)
    if isinstance(a, Polytope3) and isinstance(b, Ball):
        return impl.polytope_ball_hits(*polytope_arrays(a), b.center, b.radius, rot, t, 0, tol)
    if isinstance(a, Ball) and isinstance(b, Polytope3):
        return impl.polytope_ball_hits(*polytope_arrays(b), a.center, a.radius, rot, t, 1, tol)
    if isinstance(a, Polytope3) and isinstance(b, Polytope3):
        return impl.polytope_polytope_hits(a.vertices, a.normals, _edge_directions(a),
                                           b.vertices, b.normals, _edge_directions(b), rot, t, tol)
    raise UnsupportedError(f"no 3D intersection kernel for {type(a).__name__}/{type(b).__name__}")


def hits(a, b, rotations, translations, tol=INTERSECT_TOL):
    """0/1 array: does ``a`` meet ``g_i b`` for each motion in the batch."""
    if a.dim != b.dim:
        raise ValidationError("bodies must have the same dimension")
    translations = np.asarray(translations, dtype=float)
    if a.dim == 2:
        return hits_2d(a, b, rotations, translations[:, 0], translations[:, 1], tol)
    return hits_3d(a, b, rotations, translations, tol)
