"""Index ranges of the unitary valuation and area-measure bases in complex dimension ``n``.

``mu_{k,q}`` and ``Delta_{k,q}``: ``max(0, k-n) <= q``, ``2q <= k <= 2n``.
``N_{k,q}``: ``max(0, k-n) < q`` and ``2q < k``.
``B_{k,q}`` is ``Delta_{k,q} + N_{k,q}`` where ``N_{k,q}`` exists and ``Delta_{k,q}`` otherwise.
"""

from dataclasses import dataclass

from ..errors import IndexRangeError

VAL_FAMILY = "mu"
AREA_FAMILIES = ("delta", "N")
BN_FAMILIES = ("B", "N")


def valid_val(n, k, q):
    return n >= 0 and 0 <= k <= 2 * n and max(0, k - n) <= q and 2 * q <= k


def valid_delta(n, k, q):
    return valid_val(n, k, q)


def valid_n(n, k, q):
    return n >= 0 and 0 <= k <= 2 * n and max(0, k - n) < q and 2 * q < k


def valid_area(n, k, q, family):
    if family in ("delta", "B"):
        return valid_delta(n, k, q)
    if family == "N":
        return valid_n(n, k, q)
    return False


@dataclass(frozen=True, order=True)
class ValIndex:
    n: int
    k: int
    q: int

    def __post_init__(self):
        if not valid_val(self.n, self.k, self.q):
            raise IndexRangeError(f"index out of range: mu_{{{self.k},{self.q}}} for n = {self.n}")

    family = VAL_FAMILY

    def __str__(self):
        return f"mu[{self.k},{self.q}]"


@dataclass(frozen=True, order=True)
class AreaIndex:
    """``family`` is ``"delta"`` or ``"N"``, or ``"B"`` for elements written in the (B, N) basis."""

    n: int
    k: int
    q: int
    family: str

    def __post_init__(self):
        if self.family not in ("delta", "N", "B"):
            raise IndexRangeError(f"unknown area family {self.family!r}")
        if not valid_area(self.n, self.k, self.q, self.family):
            raise IndexRangeError(f"index out of range: {self.family}_{{{self.k},{self.q}}} for n = {self.n}")

    def __str__(self):
        return f"{self.family}[{self.k},{self.q}]"


def val_indices(n):
    return [ValIndex(n, k, q) for k in range(2 * n + 1) for q in range(k // 2 + 1) if valid_val(n, k, q)]


def area_indices(n, families=AREA_FAMILIES):
    return [AreaIndex(n, k, q, f) for k in range(2 * n + 1) for q in range(k // 2 + 1)
            for f in families if valid_area(n, k, q, f)]
