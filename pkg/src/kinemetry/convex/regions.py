"""Borel test regions on the circle S^1 and the sphere S^2.

Arcs are closed, pairwise disjoint modulo 2pi and stored normalized as
``(start, length)`` with ``start`` in [0, 2pi).  Caps on S^2 must be pairwise
disjoint so the spherical measure of a union is the sum of cap areas.
"""

from dataclasses import dataclass
import math

import numpy as np

from ..errors import ValidationError

TWO_PI = 2 * math.pi
# Closedness slack for membership tests of arcs and caps.
MEMBER_TOL = 1e-12


class FullSphere:
    """The whole unit sphere (S^1 or S^2, decided by the body it is paired with)."""

    def __repr__(self):
        return "FullSphere()"

    def __eq__(self, other):
        return isinstance(other, FullSphere)

    def __hash__(self):
        return hash(FullSphere)


FULL = FullSphere()


def _merge(pieces):
    """Union of ``(start, length)`` pieces as canonical disjoint arcs."""
    flat = []
    for start, length in pieces:
        if length <= 0:
            continue
        if length >= TWO_PI:
            return ((0.0, TWO_PI),)
        s = start % TWO_PI
        e = s + length
        if e > TWO_PI:
            flat.append((s, TWO_PI))
            flat.append((0.0, e - TWO_PI))
        else:
            flat.append((s, e))
    if not flat:
        return ()
    flat.sort()
    merged = [list(flat[0])]
    for s, e in flat[1:]:
        if s <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    if len(merged) > 1 and merged[0][0] <= 0.0 and merged[-1][1] >= TWO_PI:
        last = merged.pop()
        merged[0] = [last[0], merged[0][1] + TWO_PI]
    if merged[0][1] - merged[0][0] >= TWO_PI:
        return ((0.0, TWO_PI),)
    return tuple((s, e - s) for s, e in merged)


@dataclass(frozen=True)
class Arcs:
    """Finite union of closed arcs on S^1, given as ``[(lo, hi), ...]`` in radians."""

    arcs: tuple

    def __init__(self, arcs=()):
        pieces = []
        for lo, hi in arcs:
            lo, hi = float(lo), float(hi)
            length = hi - lo
            if not (0 < length <= TWO_PI + 1e-15):
                raise ValidationError(f"arc [{lo}, {hi}] must have length in (0, 2pi]")
            pieces.append((lo % TWO_PI, min(length, TWO_PI)))
        for i, a in enumerate(pieces):
            for b in pieces[i + 1:]:
                if _overlap(a, b) >= 0:
                    raise ValidationError("arcs must be pairwise disjoint modulo 2pi")
        object.__setattr__(self, "arcs", tuple(sorted(pieces)))

    @classmethod
    def _canonical(cls, pieces):
        out = cls.__new__(cls)
        object.__setattr__(out, "arcs", _merge(pieces))
        return out

    @classmethod
    def full(cls):
        return cls._canonical([(0.0, TWO_PI)])

    @property
    def measure(self):
        return float(sum(length for _, length in self.arcs))

    @property
    def is_empty(self):
        return not self.arcs

    def contains(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.zeros(theta.shape, dtype=bool)
        for start, length in self.arcs:
            d = np.mod(theta - start, TWO_PI)
            out |= (d <= length + MEMBER_TOL) | (d >= TWO_PI - MEMBER_TOL)
        return out

    def rotated(self, phi):
        return Arcs._canonical([(s + phi, l) for s, l in self.arcs])

    def antipodal(self):
        return self.rotated(math.pi)

    def intersect(self, other):
        other = as_arcs(other)
        pieces = []
        for s1, l1 in self.arcs:
            for s2, l2 in other.arcs:
                for shift in (-TWO_PI, 0.0, TWO_PI):
                    lo = max(s1, s2 + shift)
                    hi = min(s1 + l1, s2 + shift + l2)
                    if hi > lo:
                        pieces.append((lo, hi - lo))
        return Arcs._canonical(pieces)

    def union(self, other):
        other = as_arcs(other)
        return Arcs._canonical(list(self.arcs) + list(other.arcs))

    def bounds(self):
        """``[(lo, hi), ...]`` with ``hi - lo`` the arc length."""
        return [(s, s + l) for s, l in self.arcs]


def _overlap(a, b):
    """Signed overlap length of two arcs (negative means a gap)."""
    best = -math.inf
    for shift in (-TWO_PI, 0.0, TWO_PI):
        lo = max(a[0], b[0] + shift)
        hi = min(a[0] + a[1], b[0] + shift + b[1])
        best = max(best, hi - lo)
    return best


def as_arcs(region):
    if isinstance(region, Arcs):
        return region
    if isinstance(region, FullSphere):
        return Arcs.full()
    raise ValidationError(f"{type(region).__name__} is not a region on S^1")


@dataclass(frozen=True)
class Cap:
    axis: tuple
    angle: float


class Caps:
    """Finite union of pairwise disjoint closed spherical caps on S^2."""

    def __init__(self, caps=()):
        out = []
        for cap in caps:
            axis, angle = (cap.axis, cap.angle) if isinstance(cap, Cap) else cap
            a = np.asarray(axis, dtype=float)
            norm = np.linalg.norm(a)
            if a.shape != (3,) or not norm > 0:
                raise ValidationError("cap axis must be a nonzero 3D vector")
            angle = float(angle)
            if not (0 < angle <= math.pi):
                raise ValidationError("cap half-angle must lie in (0, pi]")
            out.append(Cap(tuple(a / norm), angle))
        for i, c in enumerate(out):
            for d in out[i + 1:]:
                between = math.acos(max(-1.0, min(1.0, float(np.dot(c.axis, d.axis)))))
                if between <= c.angle + d.angle:
                    raise ValidationError("caps must be pairwise disjoint")
        self.caps = tuple(out)

    def __repr__(self):
        return f"Caps({list(self.caps)!r})"

    def __eq__(self, other):
        return isinstance(other, Caps) and self.caps == other.caps

    def __hash__(self):
        return hash(self.caps)

    @property
    def measure(self):
        return float(sum(2 * math.pi * (1 - math.cos(c.angle)) for c in self.caps))

    def contains(self, u):
        u = np.asarray(u, dtype=float)
        out = np.zeros(u.shape[:-1], dtype=bool)
        for c in self.caps:
            cosang = np.clip(u @ np.asarray(c.axis), -1.0, 1.0)
            out |= np.arccos(cosang) <= c.angle + MEMBER_TOL
        return out

    def rotated(self, rotation):
        rotation = np.asarray(rotation, dtype=float)
        return Caps([(rotation @ np.asarray(c.axis), c.angle) for c in self.caps])


def region_measure(region, dim):
    """Spherical Lebesgue measure of ``region`` on S^{dim-1}."""
    if isinstance(region, FullSphere):
        return TWO_PI if dim == 2 else 4 * math.pi
    if dim == 2 and isinstance(region, Arcs):
        return region.measure
    if dim == 3 and isinstance(region, Caps):
        return region.measure
    raise ValidationError(f"{type(region).__name__} is not a region on S^{dim - 1}")
