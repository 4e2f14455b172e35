"""Sparse exact elements of Val^{U(n)}, Area^{U(n)} and their tensor products."""

from .indices import AreaIndex, ValIndex
from .ring import LambdaPiPoly
from ..errors import ValidationError

SLOT_TAGS = ("val", "area")


def _clean(terms):
    out = {}
    for idx, c in terms.items():
        c = LambdaPiPoly.coerce(c)
        if c:
            out[idx] = c
    return dict(sorted(out.items()))


def _area_basis(indices):
    fams = {i.family for i in indices}
    if "delta" in fams and "B" in fams:
        raise ValidationError("an area element mixes the (Delta, N) and (B, N) bases")
    return "BN" if "B" in fams else "DN"


class _Sparse:
    """Linear combination of basis indices with ring coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        self.n = int(n)
        self._terms = _clean(terms or {})
        for idx in self._terms:
            self._check_index(idx)

    def _check_index(self, idx):
        raise NotImplementedError

    def _new(self, terms):
        return type(self)(self.n, terms)

    def items(self):
        return self._terms.items()

    @property
    def terms(self):
        return dict(self._terms)

    def coeff(self, idx):
        return self._terms.get(idx, LambdaPiPoly())

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _same_space(self, other):
        if type(other) is not type(self) or other.n != self.n:
            raise ValidationError("elements live in different spaces")

    def __add__(self, other):
        self._same_space(other)
        out = dict(self._terms)
        for idx, c in other._terms.items():
            out[idx] = out.get(idx, LambdaPiPoly()) + c
        return self._new(out)

    def __neg__(self):
        return self._new({i: -c for i, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LambdaPiPoly.coerce(c)
        return self._new({i: c * v for i, v in self._terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, self.n, tuple(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"({c})*{i}" for i, c in self._terms.items()) or "0"
        return f"{type(self).__name__}(n={self.n}: {body})"


class ValElement(_Sparse):
    __slots__ = ()

    def _check_index(self, idx):
        if not isinstance(idx, ValIndex) or idx.n != self.n:
            raise ValidationError(f"{idx!r} is not a valuation index for n = {self.n}")

    @classmethod
    def basis(cls, n, k, q):
        return cls(n, {ValIndex(n, k, q): 1})


class AreaElement(_Sparse):
    """Area measure written either in the (Delta, N) basis or the (B, N) basis."""

    __slots__ = ()

    def _check_index(self, idx):
        if not isinstance(idx, AreaIndex) or idx.n != self.n:
            raise ValidationError(f"{idx!r} is not an area index for n = {self.n}")

    def __init__(self, n, terms=None):
        super().__init__(n, terms)
        _area_basis(self._terms)

    @property
    def basis_name(self):
        return _area_basis(self._terms)

    def __add__(self, other):
        self._same_space(other)
        if self and other and self.basis_name != other.basis_name:
            raise ValidationError("cannot add area elements written in different bases")
        return super().__add__(other)

    @classmethod
    def basis(cls, n, k, q, family):
        return cls(n, {AreaIndex(n, k, q, family): 1})


def element_for(tag, n, terms):
    return (ValElement if tag == "val" else AreaElement)(n, terms)


class KinTensor:
    """Sparse element of a tensor product of two slots, each ``"val"`` or ``"area"``."""

    __slots__ = ("n", "slots", "_terms")

    def __init__(self, n, slots, terms=None):
        self.n = int(n)
        slots = tuple(slots)
        if len(slots) != 2 or any(s not in SLOT_TAGS for s in slots):
            raise ValidationError(f"slots must be two of {SLOT_TAGS}, got {slots}")
        self.slots = slots
        self._terms = _clean(terms or {})
        for pos, tag in enumerate(slots):
            kind = ValIndex if tag == "val" else AreaIndex
            column = [key[pos] for key in self._terms]
            for idx in column:
                if not isinstance(idx, kind) or idx.n != self.n:
                    raise ValidationError(f"{idx!r} does not belong in a {tag} slot for n = {self.n}")
            if tag == "area":
                _area_basis(column)

    @classmethod
    def zero(cls, n, slots):
        return cls(n, slots)

    @classmethod
    def product(cls, x, y):
        """``x (x) y`` for two elements of the same ``n``."""
        if x.n != y.n:
            raise ValidationError("tensor factors must share n")
        slots = tuple("val" if isinstance(e, ValElement) else "area" for e in (x, y))
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                out[(i, j)] = out.get((i, j), LambdaPiPoly()) + a * b
        return cls(x.n, slots, out)

    def items(self):
        return self._terms.items()

    @property
    def terms(self):
        return dict(self._terms)

    def coeff(self, i, j):
        return self._terms.get((i, j), LambdaPiPoly())

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _compatible(self, other):
        if not isinstance(other, KinTensor) or other.n != self.n or other.slots != self.slots:
            raise ValidationError("tensors live in different spaces")

    def __add__(self, other):
        self._compatible(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, LambdaPiPoly()) + c
        return KinTensor(self.n, self.slots, out)

    def __neg__(self):
        return KinTensor(self.n, self.slots, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LambdaPiPoly.coerce(c)
        return KinTensor(self.n, self.slots, {k: c * v for k, v in self._terms.items()})

    def transpose(self):
        return KinTensor(self.n, self.slots[::-1], {(j, i): c for (i, j), c in self._terms.items()})

    def degree_totals(self):
        return {i.k + j.k for i, j in self._terms}

    def apply(self, f, g):
        """``(f (x) g)(self)`` for linear maps given on single elements."""
        out = None
        cache_f, cache_g = {}, {}
        for (i, j), c in self._terms.items():
            if j not in cache_g:
                cache_g[j] = g(element_for(self.slots[1], self.n, {j: 1}))
            gy = cache_g[j]
            if gy.is_zero():
                continue
            if i not in cache_f:
                cache_f[i] = f(element_for(self.slots[0], self.n, {i: 1}))
            part = KinTensor.product(cache_f[i], gy)
            if part.is_zero():
                continue
            part = part.scale(c)
            out = part if out is None else out + part
        if out is None:
            f_tag = _image_tag(f, self.slots[0], self.n)
            g_tag = _image_tag(g, self.slots[1], self.n)
            return KinTensor(self.n, (f_tag, g_tag))
        return out

    def __eq__(self, other):
        if not isinstance(other, KinTensor):
            return NotImplemented
        return self.n == other.n and self.slots == other.slots and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, self.slots, tuple(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"({c})*{i}(x){j}" for (i, j), c in self._terms.items()) or "0"
        return f"KinTensor(n={self.n}, {self.slots}: {body})"


def _image_tag(f, tag, n):
    """Slot tag of the codomain of ``f``, read from the map's declared signature."""
    return getattr(f, "codomain", tag)
