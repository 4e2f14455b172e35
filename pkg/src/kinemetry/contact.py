"""Closed-form contact measures of smooth bodies and the bridge to local additive formulas.

In the plane the shape operator of a smooth body is its curvature
``kappa = 1 / (h + h'')``; contact measures reduce to surface area measures
and arc lengths of the normal regions.  In space only pairs of balls are
handled, where the shape operators are multiples of the identity.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .convex.bodies import CURVATURE_GRID, Ball, SupportBody2
from .convex.measures import surface_area_measure
from .convex.regions import TWO_PI, as_arcs
from .errors import ValidationError
from .kinematic.estimators import local_additive_oracle_2d


def _smooth2(body):
    if isinstance(body, SupportBody2):
        return body
    if isinstance(body, Ball) and body.dim == 2:
        if body.radius <= 0:
            raise ValidationError("disk radius must be positive")
        return body.as_support2()
    raise ValidationError(f"expected a disk or a smooth support body, got {type(body).__name__}")


@dataclass(frozen=True, eq=False)
class CurvatureField2:
    """Curvature radius ``r(t) = h(t) + h''(t)`` and curvature ``1 / r`` by normal angle."""

    body: SupportBody2

    def __post_init__(self):
        body = _smooth2(self.body)
        t = TWO_PI * np.arange(CURVATURE_GRID) / CURVATURE_GRID
        if np.any(body.radius_of_curvature(t) <= 0):
            raise ValidationError("curvature radius must be positive")
        object.__setattr__(self, "body", body)

    def radius(self, theta):
        return self.body.radius_of_curvature(theta)

    def curvature(self, theta):
        return 1.0 / self.radius(theta)


@dataclass(frozen=True)
class IsotropyAverage:
    """Probability average over the stabilizer of a normal direction.

    The group is trivial in the plane and the circle of rotations about the
    normal in space.
    """

    dim: int
    mass: float = 1.0

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValidationError("isotropy averages exist here for dimensions 2 and 3")
        if self.mass != 1.0:
            raise ValidationError("the isotropy average is a probability measure")

    @property
    def group(self):
        return "trivial" if self.dim == 2 else "SO(2)"

    def average(self, integrand, nodes=64):
        """Average of ``integrand(angle)`` over the group (midpoint rule on the circle)."""
        if self.dim == 2:
            return self.mass * integrand(0.0)
        angles = (np.arange(nodes) + 0.5) * (TWO_PI / nodes)
        return self.mass * float(np.mean([integrand(a) for a in angles]))


def contact_measure_2d(a, u, b, v):
    """``(S_1(B, V) |U| + S_1(A, U) |V|) / 2pi`` for smooth planar bodies, normal-indexed regions."""
    a, b = CurvatureField2(a).body, CurvatureField2(b).body
    u, v = as_arcs(u), as_arcs(v)
    return (surface_area_measure(b, v) * u.measure + surface_area_measure(a, u) * v.measure) / TWO_PI


def contact_coefficient_balls_3d(a, b):
    """Exact rational ``c`` with ``contact_measure_balls_3d(a, b) = c * pi``.

    Prefactor ``1 / (3 omega_3) = 1 / (4 pi)``, sphere areas ``4 pi a^2`` and
    ``4 pi b^2``, and the constant determinant ``(1/a + 1/b)^2``.
    """
    a, b = _radius(a), _radius(b)
    return Fraction(1, 4) * 16 * a**2 * b**2 * (1 / a + 1 / b) ** 2


def contact_measure_balls_3d(a, b):
    """Motion measure density of contacts between balls of radii ``a`` and ``b`` in R^3."""
    return float(contact_coefficient_balls_3d(a, b)) * math.pi


def _radius(x):
    if isinstance(x, float) and not math.isfinite(x):
        raise ValidationError("radius must be finite")
    x = Fraction(x)
    if x <= 0:
        raise ValidationError("radius must be positive")
    return x


def bridge_residual(k, u, l, v):
    """Residual between the contact measure and the local additive oracle on ``(-L, -V)``."""
    k, l = _smooth2(k), _smooth2(l)
    u, v = as_arcs(u), as_arcs(v)
    return abs(contact_measure_2d(k, u, l, v) - local_additive_oracle_2d(k, u, l.reflected(), v.antipodal()))
