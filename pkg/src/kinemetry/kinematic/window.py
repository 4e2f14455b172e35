"""Translation windows that contain every translation where two bodies can meet."""

from dataclasses import dataclass
import math

import numpy as np

from ..convex.bodies import Ball, Polygon, Polytope3, SupportBody2, body_dim
from ..errors import UnsupportedError, ValidationError

WINDOW_PAD = 1e-6


def bounding_box(body):
    """Axis-aligned ``(lo, hi)`` of a body."""
    if isinstance(body, (Polygon, Polytope3)):
        return body.vertices.min(axis=0), body.vertices.max(axis=0)
    if isinstance(body, Ball):
        return body.center - body.radius, body.center + body.radius
    if isinstance(body, SupportBody2):
        h = body.support(np.array([0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi]))
        return np.array([-h[2], -h[3]]), np.array([h[0], h[1]])
    raise UnsupportedError(type(body).__name__)


def outer_radius(body):
    """An upper bound for ``max |x|`` over the body (exact for polytopes and balls)."""
    if isinstance(body, (Polygon, Polytope3)):
        return float(np.linalg.norm(body.vertices, axis=1).max())
    if isinstance(body, Ball):
        return float(np.linalg.norm(body.center)) + body.radius
    if isinstance(body, SupportBody2):
        # max |x| = max_u h(u); grid maximum plus a Lipschitz bound on h
        n = 4096
        grid = body.support(2 * math.pi * np.arange(n) / n)
        lip = float((body.orders * (np.abs(body.cos) + np.abs(body.sin))).sum())
        return float(grid.max()) + lip * math.pi / n
    raise UnsupportedError(type(body).__name__)


def required_box(a, b, margin=0.0):
    """Box of all ``t`` with ``dist(A, R B + t) <= margin`` for some rotation ``R``."""
    lo, hi = bounding_box(a)
    rho = outer_radius(b) + margin
    return lo - rho, hi + rho


@dataclass(frozen=True, eq=False)
class TranslationWindow:
    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.array(self.lo, dtype=float)
        hi = np.array(self.hi, dtype=float)
        if lo.shape != hi.shape or lo.shape not in ((2,), (3,)):
            raise ValidationError("window corners must be 2D or 3D points of equal dimension")
        if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi)) and np.all(hi > lo)):
            raise ValidationError("window must be a finite box with positive side lengths")
        lo.setflags(write=False)
        hi.setflags(write=False)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def for_pair(cls, a, b, margin=0.0):
        if body_dim(a) != body_dim(b):
            raise ValidationError("bodies must have the same dimension")
        lo, hi = required_box(a, b, margin)
        return cls(lo - WINDOW_PAD, hi + WINDOW_PAD)

    @property
    def dim(self):
        return len(self.lo)

    @property
    def volume(self):
        return float(np.prod(self.hi - self.lo))

    def scaled(self, factor):
        """Window with the same center and side lengths multiplied by ``factor``."""
        mid = 0.5 * (self.lo + self.hi)
        half = 0.5 * factor * (self.hi - self.lo)
        return TranslationWindow(mid - half, mid + half)

    def validate_for(self, a, b, margin=0.0):
        if body_dim(a) != self.dim or body_dim(b) != self.dim:
            raise ValidationError("window dimension does not match the bodies")
        lo, hi = required_box(a, b, margin)
        if np.any(self.lo > lo - WINDOW_PAD) or np.any(self.hi < hi + WINDOW_PAD):
            raise ValidationError("window misses translations where the bodies can meet")
