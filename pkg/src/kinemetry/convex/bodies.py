"""Convex body types.

Four immutable body kinds cover every formula in the package: convex
polygons, convex 3D polytopes, balls (2D or 3D) and smooth planar bodies
given by a finite trigonometric support function.  Constructors validate
their invariants and raise :class:`~kinemetry.errors.ValidationError`.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from ..errors import ValidationError

# Relative tolerance on consecutive edge cross products of a polygon.
POLYGON_TOL = 1e-12
# Absolute tolerance for coplanarity, hull and orientation checks in 3D.
POLYTOPE_TOL = 1e-9
MAX_HARMONIC = 64
CURVATURE_GRID = 4096


def _frozen(a, shape_tail, name):
    arr = np.array(a, dtype=float)
    if arr.ndim != 1 + len(shape_tail) or arr.shape[1:] != shape_tail:
        raise ValidationError(f"{name} must have shape (m, {', '.join(map(str, shape_tail))})")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} must be finite")
    arr.setflags(write=False)
    return arr


def _cross2(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


@dataclass(frozen=True, eq=False)
class Polygon:
    """Strictly convex polygon with counterclockwise vertices."""

    vertices: np.ndarray
    dim = 2

    def __post_init__(self):
        v = _frozen(self.vertices, (2,), "polygon vertices")
        object.__setattr__(self, "vertices", v)
        if len(v) < 3:
            raise ValidationError("polygon needs at least 3 vertices")
        e = np.roll(v, -1, axis=0) - v
        lengths = np.hypot(e[:, 0], e[:, 1])
        scale = max(np.abs(v).max(), 1.0)
        if np.any(lengths <= POLYGON_TOL * scale):
            raise ValidationError("polygon has duplicate consecutive vertices")
        en = np.roll(e, -1, axis=0)
        cross = _cross2(e, en)
        if np.any(cross <= POLYGON_TOL * lengths * np.roll(lengths, -1)):
            raise ValidationError("polygon is not strictly convex and counterclockwise")
        turning = np.arctan2(cross, np.einsum("ij,ij->i", e, en)).sum()
        if abs(turning - 2 * math.pi) > 1e-6:
            raise ValidationError("polygon winds more than once")

    @classmethod
    def regular(cls, m, radius=1.0, center=(0.0, 0.0), phase=0.0):
        t = phase + 2 * math.pi * np.arange(m) / m
        return cls(np.column_stack([center[0] + radius * np.cos(t), center[1] + radius * np.sin(t)]))

    @classmethod
    def box(cls, lo=(0.0, 0.0), hi=(1.0, 1.0)):
        (x0, y0), (x1, y1) = lo, hi
        return cls([[x0, y0], [x1, y0], [x1, y1], [x0, y1]])

    @property
    def edges(self):
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    @property
    def edge_lengths(self):
        e = self.edges
        return np.hypot(e[:, 0], e[:, 1])

    @property
    def normal_angles(self):
        """Outward unit normal angle of each edge ``v[i] -> v[i+1]``, in [0, 2pi)."""
        e = self.edges
        return np.mod(np.arctan2(-e[:, 0], e[:, 1]), 2 * math.pi)

    @property
    def area(self):
        v = self.vertices
        return 0.5 * float(_cross2(v, np.roll(v, -1, axis=0)).sum())

    @property
    def perimeter(self):
        return float(self.edge_lengths.sum())

    def transformed(self, rotation, translation):
        return Polygon(self.vertices @ np.asarray(rotation).T + np.asarray(translation))

    def reflected(self):
        return Polygon(-self.vertices)


def _newell_normal(points):
    nxt = np.roll(points, -1, axis=0)
    n = np.array([
        ((points[:, 1] - nxt[:, 1]) * (points[:, 2] + nxt[:, 2])).sum(),
        ((points[:, 2] - nxt[:, 2]) * (points[:, 0] + nxt[:, 0])).sum(),
        ((points[:, 0] - nxt[:, 0]) * (points[:, 1] + nxt[:, 1])).sum(),
    ])
    return n


@dataclass(frozen=True, eq=False)
class Polytope3:
    """Convex polytope in R^3 given by vertices and outward-oriented faces.

    Each face lists vertex indices counterclockwise when seen from outside.
    Derived data (face normals, plane offsets, face areas, the edge list with
    its two adjacent faces) is computed once at construction.
    """

    vertices: np.ndarray
    faces: tuple
    normals: np.ndarray = field(init=False, repr=False)
    offsets: np.ndarray = field(init=False, repr=False)
    face_areas: np.ndarray = field(init=False, repr=False)
    edges: tuple = field(init=False, repr=False)
    edge_faces: tuple = field(init=False, repr=False)
    dim = 3

    def __post_init__(self):
        v = _frozen(self.vertices, (3,), "polytope vertices")
        object.__setattr__(self, "vertices", v)
        faces = tuple(tuple(int(i) for i in f) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        nv = len(v)
        if nv < 4 or len(faces) < 4:
            raise ValidationError("polytope needs at least 4 vertices and 4 faces")
        centroid = v.mean(axis=0)
        scale = max(float(np.abs(v).max()), 1.0)
        normals, offsets, areas = [], [], []
        for fi, f in enumerate(faces):
            if len(f) < 3 or len(set(f)) != len(f):
                raise ValidationError(f"face {fi} needs at least 3 distinct vertices")
            if min(f) < 0 or max(f) >= nv:
                raise ValidationError(f"face {fi} references a missing vertex")
            pts = v[list(f)]
            n = _newell_normal(pts)
            norm = np.linalg.norm(n)
            if norm <= POLYTOPE_TOL * scale * scale:
                raise ValidationError(f"face {fi} is degenerate")
            n = n / norm
            d = float(pts.mean(axis=0) @ n)
            if np.any(np.abs(pts @ n - d) > POLYTOPE_TOL * scale):
                raise ValidationError(f"face {fi} is not planar")
            if d - centroid @ n <= 0:
                raise ValidationError(f"face {fi} is not oriented outward")
            e = np.roll(pts, -1, axis=0) - pts
            turn = np.cross(e, np.roll(e, -1, axis=0)) @ n
            if np.any(turn <= POLYTOPE_TOL * scale * scale):
                raise ValidationError(f"face {fi} is not strictly convex")
            normals.append(n)
            offsets.append(d)
            areas.append(0.5 * norm)
        normals = np.array(normals)
        offsets = np.array(offsets)
        if np.any(v @ normals.T - offsets > POLYTOPE_TOL * scale):
            raise ValidationError("vertices lie outside a face plane: not convex")
        edge_map = {}
        for fi, f in enumerate(faces):
            for a, b in zip(f, f[1:] + f[:1]):
                if (a, b) in edge_map:
                    raise ValidationError(f"directed edge ({a}, {b}) used twice")
                edge_map[(a, b)] = fi
        edges, edge_faces = [], []
        for (a, b), fi in sorted(edge_map.items()):
            if (b, a) not in edge_map:
                raise ValidationError(f"edge ({a}, {b}) has only one adjacent face")
            if a < b:
                edges.append((a, b))
                edge_faces.append((fi, edge_map[(b, a)]))
        incident = [[] for _ in range(nv)]
        for fi, f in enumerate(faces):
            for i in f:
                incident[i].append(fi)
        for i, fs in enumerate(incident):
            if len(fs) < 3 or np.linalg.matrix_rank(normals[fs], tol=1e-9) < 3:
                raise ValidationError(f"vertex {i} is not an extreme point")
        if len(v) - len(edges) + len(faces) != 2:
            raise ValidationError("face list does not describe a closed convex surface")
        for name, val in (("normals", normals), ("offsets", offsets), ("face_areas", np.array(areas))):
            val.setflags(write=False)
            object.__setattr__(self, name, val)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "edge_faces", tuple(edge_faces))

    @classmethod
    def from_points(cls, points):
        """Convex hull of ``points`` with coplanar hull triangles merged into faces."""
        from scipy.spatial import ConvexHull

        pts = np.asarray(points, dtype=float)
        hull = ConvexHull(pts)
        verts = pts[np.sort(hull.vertices)]
        scale = max(float(np.abs(verts).max()), 1.0)
        planes = []
        for eq in hull.equations:
            n, d = eq[:3], -eq[3]
            if not any(np.allclose(n, pn, atol=1e-9) and abs(d - pd) < 1e-9 * scale for pn, pd in planes):
                planes.append((n, d))
        faces = []
        for n, d in planes:
            on = [i for i in range(len(verts)) if abs(verts[i] @ n - d) < 1e-9 * scale]
            c = verts[on].mean(axis=0)
            u = verts[on[0]] - c
            u /= np.linalg.norm(u)
            w = np.cross(n, u)
            ang = [math.atan2((verts[i] - c) @ w, (verts[i] - c) @ u) for i in on]
            faces.append([on[i] for i in np.argsort(ang)])
        return cls(verts, faces)

    @classmethod
    def box(cls, lo=(0.0, 0.0, 0.0), hi=(1.0, 1.0, 1.0)):
        (x0, y0, z0), (x1, y1, z1) = lo, hi
        verts = [[x0, y0, z0], [x1, y0, z0], [x1, y1, z0], [x0, y1, z0],
                 [x0, y0, z1], [x1, y0, z1], [x1, y1, z1], [x0, y1, z1]]
        faces = [[0, 3, 2, 1], [4, 5, 6, 7], [0, 1, 5, 4],
                 [1, 2, 6, 5], [2, 3, 7, 6], [3, 0, 4, 7]]
        return cls(verts, faces)

    @property
    def surface_area(self):
        return float(self.face_areas.sum())

    @property
    def volume(self):
        return float((self.face_areas * self.offsets).sum() / 3.0)

    def edge_length(self, i):
        a, b = self.edges[i]
        return float(np.linalg.norm(self.vertices[b] - self.vertices[a]))

    def transformed(self, rotation, translation):
        return Polytope3(self.vertices @ np.asarray(rotation).T + np.asarray(translation), self.faces)

    def reflected(self):
        return Polytope3(-self.vertices, self.faces)


@dataclass(frozen=True, eq=False)
class Ball:
    """Euclidean ball of dimension 2 or 3."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        c = np.array(self.center, dtype=float)
        if c.shape not in ((2,), (3,)) or not np.all(np.isfinite(c)):
            raise ValidationError("ball center must be a finite 2D or 3D point")
        c.setflags(write=False)
        object.__setattr__(self, "center", c)
        r = float(self.radius)
        if not (r >= 0 and math.isfinite(r)):
            raise ValidationError("ball radius must be a nonnegative finite number")
        object.__setattr__(self, "radius", r)

    @property
    def dim(self):
        return len(self.center)

    def transformed(self, rotation, translation):
        return Ball(np.asarray(rotation) @ self.center + np.asarray(translation), self.radius)

    def reflected(self):
        return Ball(-self.center, self.radius)

    def as_support2(self):
        """The same disk as a :class:`SupportBody2` (harmonic 1 carries the center)."""
        if self.dim != 2:
            raise ValidationError("only 2D balls have a planar support representation")
        return SupportBody2(self.radius, [self.center[0]], [self.center[1]])


@dataclass(frozen=True, eq=False)
class SupportBody2:
    """Smooth strictly convex planar body with support function

    ``h(t) = a0 + sum_m (cos[m-1] cos(m t) + sin[m-1] sin(m t))``.

    The first harmonic is a translation; curvature radius ``h + h''`` must be
    positive on a 4096-point grid.
    """

    a0: float
    cos: np.ndarray = ()
    sin: np.ndarray = ()
    dim = 2

    def __post_init__(self):
        a = np.array(self.cos, dtype=float).reshape(-1)
        b = np.array(self.sin, dtype=float).reshape(-1)
        d = max(len(a), len(b))
        if d > MAX_HARMONIC:
            raise ValidationError(f"support body harmonics are capped at degree {MAX_HARMONIC}")
        a = np.pad(a, (0, d - len(a)))
        b = np.pad(b, (0, d - len(b)))
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b)) and math.isfinite(self.a0)):
            raise ValidationError("support coefficients must be finite")
        for arr in (a, b):
            arr.setflags(write=False)
        object.__setattr__(self, "a0", float(self.a0))
        object.__setattr__(self, "cos", a)
        object.__setattr__(self, "sin", b)
        t = 2 * math.pi * np.arange(CURVATURE_GRID) / CURVATURE_GRID
        if np.any(self.radius_of_curvature(t) <= 0):
            raise ValidationError("support body is not strictly convex (h + h'' <= 0)")

    @property
    def degree(self):
        return len(self.cos)

    @property
    def orders(self):
        return np.arange(1, self.degree + 1)

    def _harmonics(self, theta, weights):
        theta = np.asarray(theta, dtype=float)
        if self.degree == 0:
            return np.zeros_like(theta)
        mt = np.multiply.outer(theta, self.orders)
        return np.cos(mt) @ (weights * self.cos) + np.sin(mt) @ (weights * self.sin)

    def support(self, theta):
        return self.a0 + self._harmonics(theta, np.ones(self.degree))

    def support_derivative(self, theta):
        theta = np.asarray(theta, dtype=float)
        if self.degree == 0:
            return np.zeros_like(theta)
        m = self.orders
        mt = np.multiply.outer(theta, m)
        return -np.sin(mt) @ (m * self.cos) + np.cos(mt) @ (m * self.sin)

    def radius_of_curvature(self, theta):
        """``h + h''`` at normal angle ``theta``."""
        return self.a0 + self._harmonics(theta, 1.0 - self.orders.astype(float) ** 2)

    def boundary_point(self, theta):
        """Point of the boundary whose outward normal has angle ``theta``."""
        theta = np.asarray(theta, dtype=float)
        h, dh = self.support(theta), self.support_derivative(theta)
        c, s = np.cos(theta), np.sin(theta)
        return np.stack([h * c - dh * s, h * s + dh * c], axis=-1)

    def rotated(self, phi):
        """Body rotated by angle ``phi``: ``h'(t) = h(t - phi)``."""
        m = self.orders
        c, s = np.cos(m * phi), np.sin(m * phi)
        return SupportBody2(self.a0, self.cos * c - self.sin * s, self.cos * s + self.sin * c)

    def translated(self, t):
        a = np.pad(self.cos, (0, max(0, 1 - self.degree)))
        b = np.pad(self.sin, (0, max(0, 1 - self.degree)))
        a[0] += t[0]
        b[0] += t[1]
        return SupportBody2(self.a0, a, b)

    def transformed(self, rotation, translation):
        rotation = np.asarray(rotation)
        return self.rotated(math.atan2(rotation[1, 0], rotation[0, 0])).translated(translation)

    def reflected(self):
        """Point reflection ``-K``: ``h(t) -> h(t + pi)``."""
        sign = np.where(self.orders % 2 == 1, -1.0, 1.0)
        return SupportBody2(self.a0, sign * self.cos, sign * self.sin)

    def __add__(self, other):
        d = max(self.degree, other.degree)
        pad = lambda x: np.pad(x, (0, d - len(x)))
        return SupportBody2(self.a0 + other.a0, pad(self.cos) + pad(other.cos), pad(self.sin) + pad(other.sin))


CONVEX_BODY_TYPES = (Polygon, Polytope3, Ball, SupportBody2)


def body_dim(body):
    if not isinstance(body, CONVEX_BODY_TYPES):
        raise ValidationError(f"not a convex body: {type(body).__name__}")
    return body.dim


def as_support2(body):
    """Smooth planar body view of a disk or support body."""
    if isinstance(body, SupportBody2):
        return body
    if isinstance(body, Ball) and body.dim == 2:
        if body.radius <= 0:
            raise ValidationError("disk radius must be positive")
        return body.as_support2()
    raise ValidationError(f"{type(body).__name__} is not a smooth planar body")
