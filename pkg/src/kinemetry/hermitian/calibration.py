"""The complex-dimension-one case, tied to the classical planar formulas.

For ``n = 1`` the unitary valuations are the planar intrinsic volumes up to
unknown scales ``mu_{k,q} = a_k mu_k``.  The built-in kinematic tensor is
the planar principal kinematic formula written in that basis.  Area
measures are identified with ``Delta_{0,0} = b_0 sigma`` (spherical Lebesgue
measure) and ``Delta_{1,0} = b_1 S_1`` where ``b_0 = a_0 / 2pi`` and
``b_1 = a_1 / 2`` follow from the globalizations ``sigma(S^1) = 2pi mu_0``
and ``S_1(., S^1) = 2 mu_1``.
"""

from fractions import Fraction

import sympy

from ..convex.measures import surface_area_measure
from ..convex.regions import as_arcs
from ..errors import ValidationError
from .elements import KinTensor
from .indices import AreaIndex, ValIndex
from .maps import compute_AS
from .ring import LambdaPiPoly, PiPoly

N1 = 1


def _unit_terms():
    """``(scale expression, unit tensor)`` pairs whose sum is the built-in tensor."""
    mu = lambda k, q: ValIndex(N1, k, q)
    return [
        (lambda a0, a1, a2, pi: 1 / (a0 * a2), {(mu(0, 0), mu(2, 1)): 1, (mu(2, 1), mu(0, 0)): 1}),
        (lambda a0, a1, a2, pi: 2 / (pi * a1**2), {(mu(1, 0), mu(1, 0)): 1}),
    ]


def builtin_kchi_n1(a0=1, a1=1, a2=1):
    """Planar principal kinematic formula as a Val (x) Val tensor for rational scales ``a_k > 0``."""
    scales = [Fraction(a) for a in (a0, a1, a2)]
    if any(a <= 0 for a in scales):
        raise ValidationError("scales must be positive")
    pi = PiPoly.pi()
    out = KinTensor.zero(N1, ("val", "val"))
    for expr, terms in _unit_terms():
        coeff = expr(*(PiPoly.const(a) for a in scales), pi)
        out = out + KinTensor(N1, ("val", "val"), terms).scale(coeff)
    return out


def _delta(k, q):
    return AreaIndex(N1, k, q, "delta")


def classical_scales(a0, a1, pi):
    """``(b_0, b_1)`` with ``Delta_{0,0} = b_0 sigma`` and ``Delta_{1,0} = b_1 S_1``."""
    return a0 / (2 * pi), a1 / 2


def calibrate_n1():
    """Solve for the scales making the computed A(S_1) equal ``(sigma (x) S_1 + S_1 (x) sigma) / 2pi``.

    Returns a report with the equations, the solution set, and whether the
    set is exactly the ray ``a_0 = a_1 = a_2 > 0``.
    """
    a0, a1, a2 = sympy.symbols("a0 a1 a2", positive=True)
    pi = sympy.pi
    computed = {}
    for expr, terms in _unit_terms():
        scale = expr(a0, a1, a2, pi)
        for key, c in compute_AS(KinTensor(N1, ("val", "val"), terms)).items():
            computed[key] = computed.get(key, 0) + scale * c.to_sympy()
    b0, b1 = classical_scales(a0, a1, pi)
    factor = {_delta(0, 0): b0, _delta(1, 0): b1}
    # sigma (x) S_1 = Delta00 (x) Delta10 / (b0 b1), and symmetrically
    target = {
        (_delta(0, 0), _delta(1, 0)): 1 / (2 * pi * factor[_delta(0, 0)] * factor[_delta(1, 0)]),
        (_delta(1, 0), _delta(0, 0)): 1 / (2 * pi * factor[_delta(1, 0)] * factor[_delta(0, 0)]),
    }
    keys = sorted(set(computed) | set(target))
    equations = [sympy.simplify(computed.get(k, 0) - target.get(k, 0)) for k in keys]
    equations = [e for e in equations if e != 0]
    symmetry = sympy.simplify(computed.get((_delta(1, 0), _delta(0, 0)), 0)
                              - computed.get((_delta(0, 0), _delta(1, 0)), 0))
    solutions = sympy.solve([sympy.numer(sympy.together(e)) for e in equations], [a0, a1, a2], dict=True)
    ray = bool(solutions) and all(
        sympy.simplify(s.get(a0, a0) - s.get(a1, a1)) == 0 and sympy.simplify(s.get(a1, a1) - s.get(a2, a2)) == 0
        for s in solutions
    )
    sym_ok = all(sympy.simplify(symmetry.subs(s)) == 0 for s in solutions)
    return {
        "equations": [str(e) + " = 0" for e in equations],
        "symmetry_condition": str(sympy.simplify(sympy.numer(sympy.together(symmetry)))) + " = 0",
        "solutions": [{str(k): str(v) for k, v in sorted(s.items(), key=lambda kv: str(kv[0]))} for s in solutions],
        "all_equal": ray,
        "symmetric_on_solutions": sym_ok,
        "solution_set": "a0 = a1 = a2 = a, a > 0" if ray else "unexpected",
    }


def classical_coefficients(t, a=1):
    """Coefficients of an n = 1 Area (x) Area tensor on ``sigma`` and ``S_1`` (exact)."""
    if t.n != N1 or t.slots != ("area", "area"):
        raise ValidationError("expected an n = 1 Area (x) Area tensor")
    a = PiPoly.const(Fraction(a))
    b0, b1 = classical_scales(a, a, PiPoly.pi())
    name = {(0, 0): ("sigma", b0), (1, 0): ("S1", b1)}
    out = {}
    for (i, j), c in t.items():
        if i.family != "delta" or j.family != "delta":
            raise ValidationError("n = 1 area measures have no N part")
        (ni, bi), (nj, bj) = name[(i.k, i.q)], name[(j.k, j.q)]
        out[(ni, nj)] = out.get((ni, nj), LambdaPiPoly()) + c * bi * bj
    return out


def classical_target():
    half_over_pi = PiPoly.monomial(Fraction(1, 2), -2)
    return {("sigma", "S1"): half_over_pi, ("S1", "sigma"): half_over_pi}


def evaluate_classical(coeffs, k, u, l, v):
    """Evaluate ``sum c * m_i(K, U) * m_j(L, V)`` for planar bodies and arc regions."""
    def functional(name, body, region):
        return as_arcs(region).measure if name == "sigma" else surface_area_measure(body, region)

    return sum(c.to_float() * functional(i, k, u) * functional(j, l, v) for (i, j), c in coeffs.items())


def calibrated_AS_n1():
    return compute_AS(builtin_kchi_n1(1, 1, 1))


__all__ = [
    "builtin_kchi_n1", "calibrate_n1", "calibrated_AS_n1", "classical_coefficients",
    "classical_scales", "classical_target", "evaluate_classical",
]
