"""Kinematic integrals: Monte Carlo estimators and their exact counterparts."""

from dataclasses import dataclass
import math

import numpy as np

from .. import kernels
from ..convex.bodies import Ball, Polygon, Polytope3, SupportBody2, as_support2, body_dim
from ..convex.measures import ball_volume, intrinsic_volumes, surface_area_measure
from ..convex.regions import TWO_PI, as_arcs
from ..errors import UnsupportedError, ValidationError
from .sampling import run_chunks, sample_motions
from .window import TranslationWindow


@dataclass(frozen=True)
class HaarNormalization:
    """Rigid-motion measure: probability Haar measure on rotations times Lebesgue measure."""

    rotation_mass: float = 1.0
    translation_measure: str = "lebesgue"

    def __post_init__(self):
        if self.rotation_mass != 1.0 or self.translation_measure != "lebesgue":
            raise ValidationError("rotations carry a probability measure and translations Lebesgue measure")

    def motion_volume(self, window):
        return self.rotation_mass * window.volume


HAAR = HaarNormalization()


@dataclass(frozen=True)
class McEstimate:
    value: float
    stderr: float
    samples: int
    seed: int

    def __post_init__(self):
        if not self.stderr >= 0:
            raise ValidationError("stderr must be nonnegative")
        if self.samples < 1:
            raise ValidationError("samples must be at least 1")

    def z(self, exact):
        diff = self.value - exact
        if self.stderr > 0:
            return diff / self.stderr
        return 0.0 if diff == 0 else math.copysign(math.inf, diff)


def _bernoulli_estimate(count, samples, scale, seed):
    """Estimate ``scale * E[indicator]`` from a hit count; stderr uses the ddof=1 sample deviation."""
    p = count / samples
    var = p * (1 - p) * samples / (samples - 1) if samples > 1 else 0.0
    return McEstimate(scale * p, scale * math.sqrt(var / samples), samples, seed)


def _check_pair(a, b):
    if body_dim(a) != body_dim(b):
        raise ValidationError("bodies must have the same dimension")
    if a.dim not in (2, 3):
        raise ValidationError("only dimensions 2 and 3 are supported")
    return a.dim


# ---------------------------------------------------------------- principal formula

def pkf_rhs(a, b):
    """``omega_n^-1 sum_i C(n,i)^-1 omega_i omega_{n-i} mu_i(A) mu_{n-i}(B)``."""
    n = _check_pair(a, b)
    ma, mb = intrinsic_volumes(a), intrinsic_volumes(b)
    total = sum(ball_volume(i) * ball_volume(n - i) / math.comb(n, i) * ma[i] * mb[n - i] for i in range(n + 1))
    return float(total / ball_volume(n))


def estimate_pkf(a, b, samples, seed, window=None):
    """Monte Carlo estimate of the motion measure of ``{g : A meets gB}``."""
    n = _check_pair(a, b)
    window = TranslationWindow.for_pair(a, b) if window is None else window
    window.validate_for(a, b)

    def task(rng, size):
        rot, trans = sample_motions(n, size, rng, window.lo, window.hi)
        return int(kernels.hits(a, b, rot, trans).sum(dtype=np.int64))

    count = sum(run_chunks(task, samples, seed))
    return _bernoulli_estimate(count, samples, HAAR.motion_volume(window), seed)


def pkf_mc_report(a, b, samples, seed, window=None):
    est = estimate_pkf(a, b, samples, seed, window)
    return mc_report("pkf", est, pkf_rhs(a, b))


def mc_report(formula, est, exact):
    z = est.z(exact)
    return {
        "formula": formula,
        "estimate": est.value,
        "stderr": est.stderr,
        "exact": exact,
        "z": z if math.isfinite(z) else None,
        "rel_error": abs(est.value - exact) / abs(exact) if exact else abs(est.value),
        "samples": est.samples,
        "seed": est.seed,
    }


# ---------------------------------------------------------------- additive formulas

def midpoint_nodes(count):
    if count < 1:
        raise ValidationError("quadrature needs at least one node")
    return (np.arange(count) + 0.5) * (TWO_PI / count)


SMOOTH_GRID = 256  # exact for products of trigonometric polynomials of degree < 256


def _support_at(body, theta):
    """Support function at normal angles ``theta`` (any shape)."""
    if isinstance(body, Polygon):
        u = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        return (u @ body.vertices.T).max(axis=-1)
    return as_support2(body).support(theta)


def _mixed_area_twice(k, l, phis):
    """``2 V(K, R_phi L)`` for every rotation angle in ``phis``."""
    if isinstance(k, Polygon):
        return _support_at(l, k.normal_angles[None, :] - phis[:, None]) @ k.edge_lengths
    if isinstance(l, Polygon):
        return _support_at(k, l.normal_angles[None, :] + phis[:, None]) @ l.edge_lengths
    # both smooth: integral of h_{R L} against the curvature radius of K
    theta = np.arange(SMOOTH_GRID) * (TWO_PI / SMOOTH_GRID)
    radius = as_support2(k).radius_of_curvature(theta)
    return _support_at(l, theta[None, :] - phis[:, None]) @ radius * (TWO_PI / SMOOTH_GRID)


def additive_global(k, l, nodes=2048):
    """Rotation average of ``vol(K + hL)`` over the probability Haar measure."""
    n = _check_pair(k, l)
    if n == 2:
        mixed = _mixed_area_twice(k, l, midpoint_nodes(nodes))
        return float(intrinsic_volumes(k)[2] + intrinsic_volumes(l)[2] + mixed.mean())
    ball, other = (l, k) if isinstance(l, Ball) else (k, l) if isinstance(k, Ball) else (None, None)
    if ball is None:
        raise UnsupportedError("3D additive formula needs a ball in one slot")
    mu = intrinsic_volumes(other)
    return float(sum(mu[i] * ball_volume(3 - i) * ball.radius ** (3 - i) for i in range(4)))


def local_additive_2d(k, u, l, v, nodes=4096):
    """Midpoint quadrature of ``phi -> S_1(K + R_phi L, U cap R_phi V)`` averaged over ``phi``."""
    _check_planar(k, l)
    u, v = as_arcs(u), as_arcs(v)
    phis = midpoint_nodes(nodes)
    total = 0.0
    # S_1(K + R L, W) = S_1(K, W) + S_1(L, R^-1 W) with W = U cap R V
    for body, first, second, sign in ((k, u, v, -1.0), (l, v, u, 1.0)):
        if isinstance(body, Polygon):
            n = body.normal_angles
            inside = first.contains(n)[None, :] & second.contains(n[None, :] + sign * phis[:, None])
            total += float((inside * body.edge_lengths).sum())
        else:
            total += sum(surface_area_measure(body, first.intersect(second.rotated(-sign * phi))) for phi in phis)
    return total / nodes


def local_additive_oracle_2d(k, u, l, v):
    """Closed form ``(|V| S_1(K,U) + |U| S_1(L,V)) / 2pi`` of :func:`local_additive_2d`."""
    _check_planar(k, l)
    u, v = as_arcs(u), as_arcs(v)
    return (v.measure * surface_area_measure(k, u) + u.measure * surface_area_measure(l, v)) / TWO_PI


def _check_planar(k, l):
    for body in (k, l):
        if isinstance(body, Polytope3) or body_dim(body) != 2:
            raise ValidationError("local additive formulas are planar")


# ---------------------------------------------------------------- contact positions

def _contact_gaps(k, l, rng, size, window):
    """Sample motions; return gap, contact normal angle and the L-frame normal angle."""
    rot, trans = sample_motions(2, size, rng, window.lo, window.hi)
    fmin, theta = kernels.separation_2d(k, l, rot, trans[:, 0], trans[:, 1])
    return -fmin, theta, theta + math.pi - rot


def _contact_counts(k, u, l, v, radii, samples, seed, window):
    u, v = as_arcs(u), as_arcs(v)

    def task(rng, size):
        gap, theta, theta_l = _contact_gaps(k, l, rng, size, window)
        ok = (gap > 0) & u.contains(theta) & v.contains(theta_l)
        return [int(np.count_nonzero(ok & (gap < r))) for r in radii]

    return np.sum(np.array(run_chunks(task, samples, seed), dtype=np.int64), axis=0)


def _contact_setup(k, l, r, window):
    for body in (k, l):
        if not (isinstance(body, SupportBody2) or (isinstance(body, Ball) and body.dim == 2)):
            raise ValidationError("contact positions need disks or smooth support bodies")
    if not (r > 0 and math.isfinite(r)):
        raise ValidationError("r must be positive")
    window = TranslationWindow.for_pair(k, l, margin=r) if window is None else window
    window.validate_for(k, l, margin=r)
    return window


def contact_mr(k, u, l, v, r, samples, seed, window=None):
    """Motion measure of positions with gap in ``(0, r)`` and contact normals in ``U``, ``V``."""
    window = _contact_setup(k, l, r, window)
    (count,) = _contact_counts(k, u, l, v, [r], samples, seed, window)
    return _bernoulli_estimate(int(count), samples, HAAR.motion_volume(window), seed)


@dataclass(frozen=True)
class ContactSlope:
    slope: McEstimate
    m_r: McEstimate
    m_half: McEstimate
    r: float


def contact_slope(k, u, l, v, r, samples, seed, window=None):
    """``(m_r - m_{r/2}) / (r/2)`` from one common set of sampled motions."""
    window = _contact_setup(k, l, r, window)
    n_r, n_half = (int(c) for c in _contact_counts(k, u, l, v, [r, r / 2], samples, seed, window))
    vol = HAAR.motion_volume(window)
    return ContactSlope(
        slope=_bernoulli_estimate(n_r - n_half, samples, vol / (r / 2), seed),
        m_r=_bernoulli_estimate(n_r, samples, vol, seed),
        m_half=_bernoulli_estimate(n_half, samples, vol, seed),
        r=r,
    )
