"""Rigid motions ``x -> R x + t`` and the Euler characteristic of convex intersections."""

from dataclasses import dataclass
import math

import numpy as np

from ..errors import ValidationError
from .bodies import body_dim

ORTHO_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class RigidMotion:
    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        r = np.array(self.rotation, dtype=float)
        t = np.array(self.translation, dtype=float)
        n = len(t)
        if n not in (2, 3) or r.shape != (n, n):
            raise ValidationError("motion must be 2D or 3D with a square rotation")
        if np.abs(r @ r.T - np.eye(n)).max() > ORTHO_TOL or abs(np.linalg.det(r) - 1) > ORTHO_TOL:
            raise ValidationError("rotation must be orthogonal with determinant +1")
        r.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)

    @property
    def dim(self):
        return len(self.translation)

    @classmethod
    def planar(cls, angle, translation=(0.0, 0.0)):
        c, s = math.cos(angle), math.sin(angle)
        return cls([[c, -s], [s, c]], translation)

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim), np.zeros(dim))

    @property
    def angle(self):
        return math.atan2(self.rotation[1, 0], self.rotation[0, 0])

    def apply(self, body):
        return body.transformed(self.rotation, self.translation)


def euler_intersects(a, b, g):
    """Euler characteristic of ``A ∩ gB``: 1 if the convex bodies meet (touching counts), else 0."""
    from .. import kernels

    if not (body_dim(a) == body_dim(b) == g.dim):
        raise ValidationError("bodies and motion must share a dimension")
    t = g.translation[None, :]
    rot = np.array([g.angle]) if g.dim == 2 else g.rotation[None]
    return int(kernels.hits(a, b, rot, t)[0])
