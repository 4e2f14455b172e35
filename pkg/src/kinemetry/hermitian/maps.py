"""The linear maps between unitary valuations and area measures, and the A(S) assembly."""

from fractions import Fraction
from math import factorial

from ..errors import IndexRangeError, KinemetryError, ValidationError
from .elements import AreaElement, ValElement
from .indices import AreaIndex, ValIndex, valid_n, valid_val
from .ring import LambdaPiPoly, PiPoly


def _codomain(tag):
    def mark(f):
        f.codomain = tag
        return f
    return mark


def _double_factorial(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def omega(m):
    """Volume of the unit ``m``-ball as an exact monomial in ``pi^(1/2)``."""
    if m < 0:
        raise ValidationError("omega needs a nonnegative dimension")
    if m % 2 == 0:
        return PiPoly.monomial(Fraction(1, factorial(m // 2)), m)
    # Gamma(m/2 + 1) = m!! / 2^((m+1)/2) * sqrt(pi)
    return PiPoly.monomial(Fraction(2 ** ((m + 1) // 2), _double_factorial(m)), m - 1)


def c_coeff(n, k, q):
    """``1 / (q! (n-k+q)! (k-2q)! omega_{2n-k})``."""
    args = (q, n - k + q, k - 2 * q, 2 * n - k)
    if min(args) < 0:
        raise ValidationError(f"c_{{{n},{k},{q}}} has a negative factorial argument")
    return PiPoly.const(Fraction(1, factorial(q) * factorial(n - k + q) * factorial(k - 2 * q))) / omega(2 * n - k)


# ------------------------------------------------------------------ bases

def b_symbol(n, k, q):
    """``B_{k,q}`` expanded in the (Delta, N) basis."""
    terms = {AreaIndex(n, k, q, "delta"): 1}
    if valid_n(n, k, q):
        terms[AreaIndex(n, k, q, "N")] = 1
    return AreaElement(n, terms)


def _linear(x, kind, image):
    if not isinstance(x, kind):
        raise ValidationError(f"expected {kind.__name__}, got {type(x).__name__}")
    out = None
    for idx, c in x.items():
        part = image(idx).scale(c)
        out = part if out is None else out + part
    return out


def _sum_area(n, parts):
    out = AreaElement(n)
    for p in parts:
        out = out + p
    return out


@_codomain("area")
def to_B_basis(x):
    """Rewrite a (Delta, N) element in the (B, N) basis: ``Delta = B - N`` where ``N`` exists."""
    if x.basis_name == "BN":
        return x
    terms = {}
    for idx, c in x.items():
        if idx.family == "delta":
            b = AreaIndex(x.n, idx.k, idx.q, "B")
            terms[b] = terms.get(b, LambdaPiPoly()) + c
            if valid_n(x.n, idx.k, idx.q):
                nn = AreaIndex(x.n, idx.k, idx.q, "N")
                terms[nn] = terms.get(nn, LambdaPiPoly()) - c
        else:
            terms[idx] = terms.get(idx, LambdaPiPoly()) + c
    return AreaElement(x.n, terms)


@_codomain("area")
def from_B_basis(x):
    """Rewrite a (B, N) element in the (Delta, N) basis."""
    if x.basis_name == "DN":
        return x
    terms = {}
    for idx, c in x.items():
        if idx.family == "B":
            for t in b_symbol(x.n, idx.k, idx.q).terms:
                terms[t] = terms.get(t, LambdaPiPoly()) + c
        else:
            terms[idx] = terms.get(idx, LambdaPiPoly()) + c
    return AreaElement(x.n, terms)


# ------------------------------------------------------------------ maps

@_codomain("val")
def glob_area(x):
    """Globalization: ``Delta_{k,q} -> mu_{k,q}``, ``N_{k,q} -> 0``."""
    x = from_B_basis(x)
    terms = {ValIndex(x.n, i.k, i.q): c for i, c in x.items() if i.family == "delta"}
    return ValElement(x.n, terms)


@_codomain("area")
def ell_B(x):
    """``mu_{k,q} -> B_{k,q}``."""
    if not x:
        return AreaElement(x.n)
    return _linear(x, ValElement, lambda i: b_symbol(i.n, i.k, i.q))


def _delta_b_basis(idx):
    n, k, q = idx.n, idx.k, idx.q
    c = c_coeff(n, k, q)
    parts = []
    if k != 2 * q:
        parts.append(_checked_b(n, k - 1, q, c * (2 * (k - 2 * q)) / c_coeff(n, k - 1, q)))
    if q != 0:
        parts.append(_checked_b(n, k - 1, q - 1, c * q / c_coeff(n, k - 1, q - 1)))
    return _sum_area(n, parts)


def _checked_b(n, k, q, coeff):
    if not valid_val(n, k, q):
        raise KinemetryError(f"internal invariant violated: B_{{{k},{q}}} out of range for n = {n}")
    return b_symbol(n, k, q).scale(coeff)


def _delta_n_basis(idx):
    n, k, q = idx.n, idx.k, idx.q
    c = c_coeff(n, k, q)
    parts = []
    if k != 2 * q and valid_n(n, k - 1, q):
        coeff = c * ((k - 2 * q) ** 2 * (2 * n - k + 1)) / (c_coeff(n, k - 1, q) * (n - k + q + 1))
        parts.append(AreaElement.basis(n, k - 1, q, "N").scale(coeff))
    if q != 0 and valid_n(n, k - 1, q - 1):
        coeff = c * (q * (2 * n - k + 1)) / c_coeff(n, k - 1, q - 1)
        parts.append(AreaElement.basis(n, k - 1, q - 1, "N").scale(-coeff))
    return _sum_area(n, parts)


@_codomain("area")
def delta_B(x):
    if not x:
        return AreaElement(x.n)
    return _linear(x, ValElement, _delta_b_basis)


@_codomain("area")
def delta_N(x):
    """N-part of the first variation; targets outside the N range are zero and dropped."""
    if not x:
        return AreaElement(x.n)
    return _linear(x, ValElement, _delta_n_basis)


@_codomain("area")
def delta_A(x):
    return delta_B(x) + delta_N(x)


def g_lambda(x):
    """``(image, flags)``; flags list inputs whose image index leaves the valuation range."""
    x = to_B_basis(x)
    terms, flags = {}, []
    shift = LambdaPiPoly.lam() / PiPoly.pi()

    def emit(k, q, coeff, source):
        if not valid_val(x.n, k, q):
            flags.append({"source": str(source), "target": f"mu[{k},{q}]", "coeff": repr(coeff)})
            return
        key = ValIndex(x.n, k, q)
        terms[key] = terms.get(key, LambdaPiPoly()) + coeff

    for idx, c in x.items():
        k, q = idx.k, idx.q
        if idx.family == "N":
            emit(k + 2, q + 1, -c * shift * (q + 1), idx)
        else:
            emit(k, q, c, idx)
            if k == 2 * q:
                emit(k + 2, q + 1, -c * shift * (q + 1), idx)
    return ValElement(x.n, terms), flags


# ------------------------------------------------------------------ tensors

def identity(x):
    return x


def check_degree_paired(t, total=None):
    want = 2 * t.n if total is None else total
    bad = [(i, j) for i, j in t.terms if i.k + j.k != want]
    if bad:
        i, j = bad[0]
        raise IndexRangeError(f"term {i} (x) {j} is not degree-paired (k + k' must be {want})")


def compute_AS(kchi):
    """``(delta_A (x) ell_B + ell_B (x) delta_N)`` applied to a degree-paired Val (x) Val tensor."""
    if kchi.slots != ("val", "val"):
        raise ValidationError("compute_AS takes a Val (x) Val tensor")
    check_degree_paired(kchi)
    # delta_N is applied first so that vanishing N-variations suppress their partner terms
    return kchi.apply(delta_A, ell_B) + kchi.apply(ell_B, delta_N)
