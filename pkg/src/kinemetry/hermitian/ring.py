"""Exact coefficient ring: finite sums of ``rational * pi^(j/2) * lambda^m``.

Exponents of ``pi^(1/2)`` may be negative; only monomials are invertible.
"""

from fractions import Fraction
import math
import numbers

from ..errors import ValidationError


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    raise ValidationError(f"exact coefficients must be rational, got {type(x).__name__}")


class LambdaPiPoly:
    """Sparse map ``(lambda_degree, half_pi_exponent) -> Fraction`` with no zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            lam, halfpi = (int(x) for x in key)
            if lam < 0:
                raise ValidationError("lambda degrees are nonnegative")
            c = _as_fraction(c)
            if c:
                clean[(lam, halfpi)] = clean.get((lam, halfpi), Fraction(0)) + c
                if not clean[(lam, halfpi)]:
                    del clean[(lam, halfpi)]
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- constructors
    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c, halfpi=0, lam=0):
        return cls({(lam, halfpi): c})

    @classmethod
    def pi(cls, power=1):
        return cls.monomial(1, 2 * power)

    @classmethod
    def lam(cls):
        return cls.monomial(1, 0, 1)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LambdaPiPoly):
            return x
        return cls.const(_as_fraction(x))

    # -- inspection
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    @property
    def lambda_degree(self):
        return max((lam for lam, _ in self._terms), default=0)

    # -- arithmetic
    def __add__(self, other):
        other = self.coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return _result(self, other, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self.coerce(other))

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __mul__(self, other):
        other = self.coerce(other)
        out = {}
        for (l1, p1), c1 in self._terms.items():
            for (l2, p2), c2 in other._terms.items():
                key = (l1 + l2, p1 + p2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return _result(self, other, out)

    __rmul__ = __mul__

    def inverse(self):
        if not self.is_monomial():
            raise ValidationError("only nonzero monomials are invertible")
        ((lam, halfpi), c), = self._terms.items()
        if lam:
            raise ValidationError("lambda is not invertible")
        return type(self)({(0, -halfpi): 1 / c})

    def __pow__(self, e):
        if not isinstance(e, numbers.Integral):
            raise ValidationError("integer powers only")
        base = self if e >= 0 else self.inverse()
        out = type(self).const(1)
        for _ in range(abs(int(e))):
            out = out * base
        return out

    def __truediv__(self, other):
        return self * self.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (LambdaPiPoly, numbers.Rational)):
            return self._terms == self.coerce(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- evaluation
    def at_lambda(self, value):
        """Substitute a rational ``lambda``; the result is lambda-free."""
        value = _as_fraction(value)
        out = {}
        for (lam, halfpi), c in self._terms.items():
            out[(0, halfpi)] = out.get((0, halfpi), Fraction(0)) + c * value**lam
        return PiPoly(out)

    def to_float(self, lam=0.0):
        return float(sum(float(c) * math.pi ** (halfpi / 2) * lam**l for (l, halfpi), c in self._terms.items()))

    def to_sympy(self):
        import sympy

        lam = sympy.Symbol("lambda")
        return sum((sympy.Rational(c.numerator, c.denominator) * sympy.pi ** sympy.Rational(halfpi, 2) * lam**l
                    for (l, halfpi), c in self._terms.items()), sympy.Integer(0))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (lam, halfpi), c in self._terms.items():
            s = str(c)
            if halfpi:
                s += f"*pi^({halfpi}/2)" if halfpi % 2 else f"*pi^{halfpi // 2}"
            if lam:
                s += f"*lambda^{lam}"
            parts.append(s)
        return " + ".join(parts)


class PiPoly(LambdaPiPoly):
    """Lambda-free elements of the ring."""

    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(terms)
        if any(lam for lam, _ in self._terms):
            raise ValidationError("PiPoly cannot carry lambda")

    @classmethod
    def monomial(cls, c, halfpi=0, lam=0):
        if lam:
            raise ValidationError("PiPoly cannot carry lambda")
        return cls({(0, halfpi): c})


def _result(a, b, terms):
    both_pi = isinstance(a, PiPoly) and isinstance(b, PiPoly)
    return (PiPoly if both_pi else LambdaPiPoly)(terms)


ZERO = PiPoly()
ONE = PiPoly.const(1)
