from fractions import Fraction
import json
import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kinemetry.errors import FormatError, IndexRangeError, ValidationError
from kinemetry.hermitian import (
    AreaElement, AreaIndex, KinTensor, LambdaPiPoly, PiPoly, ValElement, ValIndex, area_indices, b_symbol,
    builtin_kchi_n1, c_coeff, calibrate_n1, calibrated_AS_n1, check_noNN, check_symmetric, classical_coefficients,
    classical_target, compute_AS, delta_A, delta_B, delta_N, dumps_tensor, ell_B, evaluate_classical,
    from_B_basis, g_lambda, glob_area, identity, load_kchi, load_tensor, omega, save_tensor, tensor_from_dict,
    tensor_to_dict, to_B_basis, val_indices,
)
from kinemetry.convex import FULL, Arcs, Ball
from kinemetry.kinematic.estimators import local_additive_oracle_2d
from kinemetry.selftest import random_kchi, structural_ok

PI = PiPoly.pi()
LAM = LambdaPiPoly.lam()
mu = ValElement.basis


def area(n, k, q, family="delta"):
    return AreaElement.basis(n, k, q, family)


def B(n, k, q):
    return b_symbol(n, k, q)


# ---------------------------------------------------------------- ring

def test_ring_arithmetic():
    x = PiPoly.monomial(Fraction(3, 2), 1) + 2
    assert x - x == 0
    assert (PI * PI.inverse()) == 1
    assert PI ** -2 == PiPoly.monomial(1, -4)
    assert (x * 2).to_float() == pytest.approx(3 * math.sqrt(math.pi) + 4)
    assert isinstance(PI * PI, PiPoly) and not isinstance(PI * LAM, PiPoly)
    assert (LAM * PI + 1).at_lambda(2) == 2 * PI + 1


def test_ring_to_sympy():
    x = PiPoly.monomial(Fraction(4, 3), 3) + LAM * 5
    assert sympy.simplify(x.to_sympy() - (sympy.Rational(4, 3) * sympy.pi ** sympy.Rational(3, 2)
                                          + 5 * sympy.Symbol("lambda"))) == 0


def test_ring_errors():
    with pytest.raises(ValidationError):
        (PI + 1).inverse()
    with pytest.raises(ValidationError):
        LAM.inverse()
    with pytest.raises(ValidationError):
        PiPoly.monomial(1, 0, lam=1)
    with pytest.raises(ValidationError):
        PiPoly().inverse()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-4, 4), st.integers(0, 2)), max_size=4),
       st.lists(st.tuples(st.integers(-5, 5), st.integers(-4, 4), st.integers(0, 2)), max_size=4),
       st.floats(-2, 2))
def test_ring_evaluation_is_a_homomorphism(xs, ys, lam):
    x = sum((LambdaPiPoly.monomial(c, h, l) for c, h, l in xs), LambdaPiPoly())
    y = sum((LambdaPiPoly.monomial(c, h, l) for c, h, l in ys), LambdaPiPoly())
    assert (x * y).to_float(lam) == pytest.approx(x.to_float(lam) * y.to_float(lam), rel=1e-9, abs=1e-9)
    assert (x + y).to_float(lam) == pytest.approx(x.to_float(lam) + y.to_float(lam), rel=1e-9, abs=1e-9)


# ---------------------------------------------------------------- constants

def test_omega_values():
    assert omega(0) == 1
    assert omega(1) == 2
    assert omega(2) == PI
    assert omega(3) == PiPoly.monomial(Fraction(4, 3), 2)
    for m in range(0, 12):
        assert omega(m).to_float() == pytest.approx(math.pi ** (m / 2) / math.gamma(m / 2 + 1), rel=1e-14)


def test_omega_recurrence():
    for m in range(2, 31):
        assert omega(m) == omega(m - 2) * PI * Fraction(2, m)


def test_c_values():
    assert c_coeff(1, 1, 0) == Fraction(1, 2)
    assert c_coeff(2, 1, 0) == PiPoly.monomial(Fraction(3, 4), -2)
    assert c_coeff(1, 2, 1) == 1
    with pytest.raises(ValidationError):
        c_coeff(1, 3, 0)


# ---------------------------------------------------------------- indices and bases

def test_index_ranges():
    assert [(i.k, i.q) for i in val_indices(1)] == [(0, 0), (1, 0), (2, 1)]
    assert len(val_indices(2)) == 6
    assert area_indices(2, ("N",)) == []  # 2q < k and k - n < q have no common solution
    assert [(i.k, i.q) for i in area_indices(3, ("N",))] == [(3, 1)]
    assert [(i.k, i.q) for i in area_indices(4, ("N",))] == [(3, 1), (4, 1), (5, 2)]
    with pytest.raises(IndexRangeError, match="index out of range"):
        ValIndex(1, 3, 2)
    with pytest.raises(IndexRangeError):
        AreaIndex(2, 2, 1, "N")


def test_glob_values():
    assert glob_area(area(1, 1, 0)) == mu(1, 1, 0)
    assert not glob_area(area(3, 3, 1, "N"))
    assert glob_area(B(3, 3, 1)) == mu(3, 3, 1)


def test_ell_b_values():
    assert ell_B(mu(3, 3, 1)) == area(3, 3, 1) + area(3, 3, 1, "N")
    assert ell_B(mu(2, 3, 1)) == area(2, 3, 1)
    assert ell_B(mu(3, 2, 1)) == area(3, 2, 1)


@pytest.mark.parametrize("n", range(7))
def test_glob_identities(n):
    for idx in val_indices(n):
        x = ValElement(n, {idx: 1})
        assert glob_area(ell_B(x)) == x
        assert not glob_area(delta_N(x))


def test_basis_change_values():
    b31 = to_B_basis(B(3, 3, 1))
    assert b31 == AreaElement(3, {AreaIndex(3, 3, 1, "B"): 1})
    assert to_B_basis(area(3, 3, 1)) == AreaElement(3, {AreaIndex(3, 3, 1, "B"): 1, AreaIndex(3, 3, 1, "N"): -1})
    assert from_B_basis(b31) == area(3, 3, 1) + area(3, 3, 1, "N")
    assert to_B_basis(area(2, 3, 1)) == AreaElement(2, {AreaIndex(2, 3, 1, "B"): 1})


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 5), st.integers(0, 10**6))
def test_basis_round_trip(n, seed):
    rng = random.Random(seed)
    x = AreaElement(n, {i: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for i in area_indices(n)})
    assert from_B_basis(to_B_basis(x)) == x
    y = to_B_basis(x)
    assert to_B_basis(from_B_basis(y)) == y


# ---------------------------------------------------------------- first variation

def test_delta_b_values():
    assert not delta_B(mu(1, 0, 0))
    assert delta_B(mu(1, 1, 0)) == B(1, 0, 0).scale(PI)
    assert delta_B(mu(2, 2, 0)) == B(2, 1, 0).scale(Fraction(8, 3))


def test_delta_n_values():
    assert not delta_N(mu(1, 2, 1))
    assert not delta_N(mu(2, 2, 0))
    # n = 3: c_{3,4,1} * 4(2n-3) / (c_{3,3,1} (n-2)) on N_{3,1}; the N_{3,0} term is dropped
    expected = c_coeff(3, 4, 1) * (4 * 3) / c_coeff(3, 3, 1)
    assert expected == 8
    assert delta_N(mu(3, 4, 1)) == area(3, 3, 1, "N").scale(expected)
    assert delta_A(mu(1, 0, 0)).is_zero


def test_delta_type_errors():
    with pytest.raises(ValidationError):
        delta_B(area(1, 0, 0))


# ---------------------------------------------------------------- g_lambda

def test_g_lambda_values():
    img, flags = g_lambda(AreaElement(2, {AreaIndex(2, 2, 1, "B"): 1}))
    assert img == ValElement(2, {ValIndex(2, 2, 1): 1, ValIndex(2, 4, 2): -2 * LAM / PI}) and not flags
    img, flags = g_lambda(area(3, 3, 1, "N"))
    assert img == ValElement(3, {ValIndex(3, 5, 2): -2 * LAM / PI}) and not flags


def test_g_lambda_flags_out_of_range():
    img, flags = g_lambda(B(1, 2, 1))
    assert img == mu(1, 2, 1)
    assert [f["target"] for f in flags] == ["mu[4,2]"]


# ---------------------------------------------------------------- A(S)

def KT(n, terms, slots=("val", "val")):
    return KinTensor(n, slots, terms)


def test_compute_as_n1_example():
    a, b = Fraction(3, 7), PiPoly.monomial(5, -2)
    kchi = KT(1, {(ValIndex(1, 0, 0), ValIndex(1, 2, 1)): a, (ValIndex(1, 2, 1), ValIndex(1, 0, 0)): a,
                  (ValIndex(1, 1, 0), ValIndex(1, 1, 0)): b})
    expected = KinTensor.product(B(1, 1, 0), B(1, 0, 0)).scale(2 * a) \
        + KinTensor.product(B(1, 0, 0), B(1, 1, 0)).scale(b * PI)
    assert compute_AS(kchi) == expected


def test_compute_as_zero_and_errors():
    assert compute_AS(KinTensor.zero(2, ("val", "val"))).is_zero
    with pytest.raises(IndexRangeError):
        compute_AS(KT(2, {(ValIndex(2, 1, 0), ValIndex(2, 1, 0)): 1}))
    with pytest.raises(ValidationError):
        compute_AS(KinTensor.zero(2, ("area", "area")))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_structural_identity_random(n):
    rng = random.Random(100 + n)
    for _ in range(15):
        assert structural_ok(random_kchi(n, rng))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_structural_identity_hypothesis(n, seed):
    t = random_kchi(n, random.Random(seed), terms=4)
    a_s = compute_AS(t)
    assert a_s.apply(identity, glob_area) == t.apply(delta_A, identity)
    assert check_noNN(a_s)


def test_symmetry_checks():
    assert check_symmetric(calibrated_AS_n1())
    assert check_symmetric(KinTensor.zero(2, ("area", "area")))
    broken = calibrated_AS_n1() + KinTensor.product(B(1, 1, 0), B(1, 0, 0))
    report = check_symmetric(broken)
    assert not report and len(report.lines()) == 1


def test_no_nn_checks():
    n31 = area(3, 3, 1, "N")
    assert not check_noNN(KinTensor.product(n31, n31))
    assert check_noNN(KinTensor.product(B(3, 3, 1), n31))


# ---------------------------------------------------------------- JSON

def test_tensor_round_trip(tmp_path):
    t = builtin_kchi_n1() + KinTensor.product(mu(1, 1, 0), mu(1, 1, 0)).scale(LAM * PiPoly.monomial(Fraction(10**30 + 1, 7), 3))
    path = tmp_path / "t.json"
    save_tensor(t, path)
    assert load_kchi(path) == t
    a_s = compute_AS(builtin_kchi_n1())
    save_tensor(a_s, path)
    assert load_tensor(path) == a_s
    assert dumps_tensor(load_tensor(path)) == path.read_text()


def test_builtin_written_and_reread(tmp_path):
    path = tmp_path / "k.json"
    save_tensor(builtin_kchi_n1(), path)
    assert load_kchi(path) == builtin_kchi_n1()


def doc_with(**changes):
    doc = tensor_to_dict(builtin_kchi_n1())
    doc["terms"][0].update(changes)
    return doc


@pytest.mark.parametrize("doc,where,message", [
    (doc_with(k=3, q=2, k2=-1), "terms[0]", "index out of range"),
    (doc_with(k2=1, q2=0), "terms[0]", "degree pairing"),
    (doc_with(coeff=[{"num": "1/2", "den": "1", "halfpi": 0, "lambda": 0}]), "terms[0].coeff[0].num", "malformed"),
    (doc_with(coeff=[{"num": "1", "den": "0", "halfpi": 0, "lambda": 0}]), "terms[0].coeff[0].den", "zero"),
    (doc_with(family="N"), "terms[0]", "family"),
    ({"n": 1, "slots": ["val"], "terms": []}, "slots", "slots"),
])
def test_tensor_parse_errors(doc, where, message):
    with pytest.raises(FormatError) as info:
        tensor_from_dict(doc)
    assert info.value.location == where
    assert message in str(info.value)


def test_mu32_at_n1_rejected():
    doc = {"n": 1, "slots": ["val", "val"],
           "terms": [{"k": 3, "q": 2, "family": "mu", "k2": -1, "q2": 0, "family2": "mu",
                      "coeff": [{"num": "1", "den": "1", "halfpi": 0, "lambda": 0}]}]}
    with pytest.raises(FormatError, match="index out of range"):
        tensor_from_dict(doc)


def test_duplicate_terms_rejected():
    doc = tensor_to_dict(builtin_kchi_n1())
    doc["terms"].append(json.loads(json.dumps(doc["terms"][0])))
    with pytest.raises(FormatError, match="duplicate"):
        tensor_from_dict(doc)


# ---------------------------------------------------------------- n = 1 calibration

def test_builtin_coefficients():
    t = builtin_kchi_n1()
    assert t.coeff(ValIndex(1, 1, 0), ValIndex(1, 1, 0)) == 2 / PI
    assert t.coeff(ValIndex(1, 0, 0), ValIndex(1, 2, 1)) == 1
    scaled = builtin_kchi_n1(2, 3, 5)
    assert scaled.coeff(ValIndex(1, 1, 0), ValIndex(1, 1, 0)) == 2 / (PI * 9)


def test_calibration_solution_set():
    report = calibrate_n1()
    assert report["all_equal"] and report["symmetric_on_solutions"]
    assert report["solutions"] == [{"a0": "a2", "a1": "a2"}]


def test_calibrated_tensor_is_classical():
    a_s = calibrated_AS_n1()
    assert classical_coefficients(a_s) == classical_target()
    disk = Ball([0.0, 0.0], 1.0)
    half = Arcs([(0.0, math.pi)])
    value = evaluate_classical(classical_coefficients(a_s), disk, half, disk, FULL)
    assert value == pytest.approx(local_additive_oracle_2d(disk, half, disk, FULL), abs=1e-12)
    assert value == pytest.approx(2 * math.pi, abs=1e-12)


def test_uncalibrated_tensor_is_not_classical():
    a_s = compute_AS(builtin_kchi_n1(1, 2, 1))
    assert classical_coefficients(a_s) != classical_target()
    assert not check_symmetric(a_s)


@pytest.mark.parametrize("n", range(5))
def test_g_lambda_at_zero_is_globalization(n):
    for idx in area_indices(n, ("B", "N")):
        x = AreaElement(n, {idx: 1})
        img, _ = g_lambda(x)
        at_zero = ValElement(n, {i: c.at_lambda(0) for i, c in img.items()})
        assert at_zero == glob_area(x)
