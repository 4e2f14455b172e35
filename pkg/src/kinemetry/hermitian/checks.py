"""Structural checks on kinematic tensors."""

from dataclasses import dataclass, field

from ..errors import ValidationError
from .maps import to_B_basis


@dataclass
class SymmetryReport:
    """``bool(report)`` is true iff the tensor is symmetric; ``offending`` lists mismatches."""

    offending: list = field(default_factory=list)

    def __bool__(self):
        return not self.offending

    @property
    def symmetric(self):
        return bool(self)

    def lines(self):
        return [f"T[{i}, {j}] = {a}  but  T[{j}, {i}] = {b}" for i, j, a, b in self.offending]


def check_symmetric(t):
    if t.slots[0] != t.slots[1]:
        raise ValidationError("symmetry needs both slots of the same kind")
    if "area" in t.slots:
        t = t.apply(to_B_basis, to_B_basis)
    report = SymmetryReport()
    for (i, j), c in t.items():
        other = t.coeff(j, i)
        if c != other and (j, i, other, c) not in report.offending:
            report.offending.append((i, j, c, other))
    return report


def check_noNN(t):
    """True iff the Area (x) Area tensor has no ``N (x) N`` component in the (B, N) basis."""
    if t.slots != ("area", "area"):
        raise ValidationError("check_noNN takes an Area (x) Area tensor")
    bn = t.apply(to_B_basis, to_B_basis)
    return not any(i.family == "N" and j.family == "N" for i, j in bn.terms)


def nn_terms(t):
    bn = t.apply(to_B_basis, to_B_basis)
    return [(i, j, c) for (i, j), c in bn.items() if i.family == "N" and j.family == "N"]
