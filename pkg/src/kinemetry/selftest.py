"""Exact and deterministic invariant checks (no Monte Carlo), run by ``kinemetry selftest``."""

from fractions import Fraction
import math
import random

import numpy as np

from . import contact
from .convex import FULL, Arcs, Ball, Polygon, Polytope3, SupportBody2
from .convex import measures
from .hermitian import calibration, checks, indices, maps
from .hermitian.elements import AreaElement, KinTensor, ValElement
from .hermitian.ring import PiPoly
from .kinematic import estimators


def _close(x, y, rel):
    return abs(x - y) <= rel * max(1.0, abs(y))


def check_intrinsic_volumes():
    got = [measures.intrinsic_volumes(Polygon.box()), measures.intrinsic_volumes(Polytope3.box()),
           measures.intrinsic_volumes(Ball(np.zeros(3), 1.0))]
    want = [(1, 2, 1), (1, 3, 3, 1), (1, 4, 2 * math.pi, 4 * math.pi / 3)]
    return all(_close(a, b, 1e-10) for g, w in zip(got, want) for a, b in zip(g, w))


def check_external_angles():
    cube = Polytope3.box()
    ok = abs(measures.external_angle_3d(cube, "edge", 0) - 0.25) < 1e-12
    ok &= abs(measures.external_angle_3d(cube, "vertex", 0) - 0.125) < 1e-12
    return ok and np.allclose(measures.intrinsic_volumes_by_angles(cube), (1, 3, 3, 1), atol=1e-12)


def check_pkf_rhs():
    return (_close(estimators.pkf_rhs(Polygon.box(), Polygon.box()), 2 + 8 / math.pi, 1e-12)
            and _close(estimators.pkf_rhs(Polytope3.box(), Ball(np.zeros(3), 1.0)), 7 + 13 * math.pi / 3, 1e-12))


def check_local_oracle():
    disk = Ball(np.zeros(2), 1.0)
    half = Arcs([(0, math.pi)])
    return (_close(estimators.local_additive_oracle_2d(disk, FULL, disk, FULL), 4 * math.pi, 1e-12)
            and _close(estimators.local_additive_oracle_2d(disk, half, disk, FULL), 2 * math.pi, 1e-12))


def check_contact_bridge():
    body = SupportBody2(1.0, [0.2, 0.0, 0.1])
    other = SupportBody2(0.8, [0.0, 0.05], [0.1, 0.0, 0.02])
    u, v = Arcs([(0.3, 2.0)]), Arcs([(1.0, 4.0), (5.0, 6.0)])
    return all(contact.bridge_residual(k, uu, l, vv) <= 1e-10
               for k, l in ((body, Ball(np.zeros(2), 1.0)), (body, other))
               for uu, vv in ((u, v), (FULL, u)))


def check_ball_contact():
    for a, b in ((1, 1), (2, 1), (1, 1e-6)):
        exact = contact.contact_coefficient_balls_3d(a, b)
        if exact != 4 * (Fraction(a) + Fraction(b)) ** 2:
            return False
    return True


def check_omega():
    return all(maps.omega(m) == maps.omega(m - 2) * PiPoly.pi() * Fraction(2, m) for m in range(2, 31))


def check_c_values():
    return (maps.c_coeff(1, 1, 0) == Fraction(1, 2)
            and maps.c_coeff(2, 1, 0) == PiPoly.monomial(Fraction(3, 4), -2)
            and maps.c_coeff(1, 2, 1) == 1)


def check_first_variation_values():
    mu = ValElement.basis
    return (maps.delta_B(mu(1, 1, 0)) == maps.b_symbol(1, 0, 0).scale(PiPoly.pi())
            and maps.delta_B(mu(2, 2, 0)) == maps.b_symbol(2, 1, 0).scale(Fraction(8, 3)))


def check_glob_identities(max_n=6):
    for n in range(max_n + 1):
        for idx in indices.val_indices(n):
            x = ValElement(n, {idx: 1})
            if maps.glob_area(maps.ell_B(x)) != x or maps.glob_area(maps.delta_N(x)):
                return False
    return True


def check_basis_round_trip(max_n=4):
    rng = random.Random(11)
    for n in range(max_n + 1):
        idx = indices.area_indices(n)
        x = AreaElement(n, {i: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for i in idx})
        if maps.from_B_basis(maps.to_B_basis(x)) != x:
            return False
    return True


def random_kchi(n, rng, terms=6):
    """Random degree-paired Val (x) Val tensor with small rational pi-monomial coefficients."""
    vals = indices.val_indices(n)
    by_k = {}
    for v in vals:
        by_k.setdefault(v.k, []).append(v)
    out = {}
    for _ in range(terms):
        i = rng.choice(vals)
        j = rng.choice(by_k[2 * n - i.k])
        out[(i, j)] = PiPoly.monomial(Fraction(rng.randint(-5, 5), rng.randint(1, 5)), rng.randint(-2, 2))
    return KinTensor(n, ("val", "val"), out)


def structural_ok(t):
    """``(id (x) glob) A(S) == (delta_A (x) id) T`` and no ``N (x) N`` part."""
    a_s = maps.compute_AS(t)
    return a_s.apply(maps.identity, maps.glob_area) == t.apply(maps.delta_A, maps.identity) and checks.check_noNN(a_s)


def check_structural(max_n=4, per_n=10):
    rng = random.Random(5)
    return all(structural_ok(random_kchi(n, rng)) for n in range(1, max_n + 1) for _ in range(per_n))


def check_calibration():
    report = calibration.calibrate_n1()
    a_s = calibration.calibrated_AS_n1()
    disk = Ball(np.zeros(2), 1.0)
    value = calibration.evaluate_classical(calibration.classical_coefficients(a_s), disk, Arcs([(0, math.pi)]), disk, FULL)
    return (report["all_equal"] and calibration.classical_coefficients(a_s) == calibration.classical_target()
            and abs(value - 2 * math.pi) <= 1e-12 and bool(checks.check_symmetric(a_s)))


CHECKS = [
    ("intrinsic volumes", check_intrinsic_volumes),
    ("external angles", check_external_angles),
    ("principal kinematic right-hand side", check_pkf_rhs),
    ("local additive oracle", check_local_oracle),
    ("contact bridge", check_contact_bridge),
    ("ball contact measure", check_ball_contact),
    ("omega recurrence", check_omega),
    ("c coefficients", check_c_values),
    ("first variation values", check_first_variation_values),
    ("globalization identities", check_glob_identities),
    ("basis round trip", check_basis_round_trip),
    ("A(S) structure", check_structural),
    ("n = 1 calibration", check_calibration),
]


def run():
    """List of ``(name, passed)``; exceptions count as failures."""
    results = []
    for name, fn in CHECKS:
        try:
            ok = bool(fn())
        except Exception:  # a crashing check is a failed check
            ok = False
        results.append((name, ok))
    return results
