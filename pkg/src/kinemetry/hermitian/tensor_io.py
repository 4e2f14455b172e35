"""JSON reading and writing of exact tensors.

Rationals are stored as decimal strings so arbitrarily large integers
survive.  Area slots are written in the (Delta, N) basis.
"""

from fractions import Fraction
import json

from ..errors import FormatError, IndexRangeError
from .elements import SLOT_TAGS, KinTensor
from .indices import AreaIndex, ValIndex
from .maps import from_B_basis
from .ring import LambdaPiPoly

FAMILIES = {"val": ("mu",), "area": ("delta", "N")}


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError("expected an integer", where)
    return value


def _bigint(value, where):
    if not isinstance(value, str):
        raise FormatError("rationals are written as decimal strings", where)
    text = value.strip()
    body = text[1:] if text[:1] in "+-" else text
    if not body.isdigit() or not body.isascii():
        raise FormatError(f"malformed integer {value!r}", where)
    return int(text)


def _coeff(entries, where):
    if not isinstance(entries, list):
        raise FormatError("coeff must be a list of monomials", where)
    terms = {}
    for m, entry in enumerate(entries):
        at = f"{where}[{m}]"
        if not isinstance(entry, dict):
            raise FormatError("monomial must be an object", at)
        missing = {"num", "den", "halfpi", "lambda"} - entry.keys()
        if missing:
            raise FormatError(f"missing field(s) {sorted(missing)}", at)
        num = _bigint(entry["num"], f"{at}.num")
        den = _bigint(entry["den"], f"{at}.den")
        if den == 0:
            raise FormatError("zero denominator", f"{at}.den")
        lam = _int(entry["lambda"], f"{at}.lambda")
        if lam < 0:
            raise FormatError("lambda degree must be nonnegative", f"{at}.lambda")
        key = (lam, _int(entry["halfpi"], f"{at}.halfpi"))
        terms[key] = terms.get(key, Fraction(0)) + Fraction(num, den)
    return LambdaPiPoly(terms)


def _index(n, tag, k, q, family, where):
    if family not in FAMILIES[tag]:
        raise FormatError(f"family {family!r} not allowed in a {tag} slot", where)
    try:
        return ValIndex(n, k, q) if tag == "val" else AreaIndex(n, k, q, family)
    except IndexRangeError as exc:
        raise FormatError(str(exc), where) from None


def tensor_from_dict(doc, expect_slots=None):
    if not isinstance(doc, dict):
        raise FormatError("tensor document must be an object", "$")
    for field in ("n", "slots", "terms"):
        if field not in doc:
            raise FormatError(f"missing field {field!r}", "$")
    n = _int(doc["n"], "n")
    if n < 0:
        raise FormatError("n must be nonnegative", "n")
    slots = doc["slots"]
    if not (isinstance(slots, list) and len(slots) == 2 and all(s in SLOT_TAGS for s in slots)):
        raise FormatError(f"slots must be two of {list(SLOT_TAGS)}", "slots")
    slots = tuple(slots)
    if expect_slots is not None and slots != tuple(expect_slots):
        raise FormatError(f"expected slots {list(expect_slots)}", "slots")
    if not isinstance(doc["terms"], list):
        raise FormatError("terms must be a list", "terms")
    total = 2 * n if slots == ("val", "val") else 2 * n - 1
    out = {}
    for t, term in enumerate(doc["terms"]):
        at = f"terms[{t}]"
        if not isinstance(term, dict):
            raise FormatError("term must be an object", at)
        missing = {"k", "q", "family", "k2", "q2", "family2", "coeff"} - term.keys()
        if missing:
            raise FormatError(f"missing field(s) {sorted(missing)}", at)
        i = _index(n, slots[0], _int(term["k"], f"{at}.k"), _int(term["q"], f"{at}.q"), term["family"], at)
        j = _index(n, slots[1], _int(term["k2"], f"{at}.k2"), _int(term["q2"], f"{at}.q2"), term["family2"], at)
        if i.k + j.k != total:
            raise FormatError(f"degree pairing violated: k + k2 = {i.k + j.k}, expected {total}", at)
        if (i, j) in out:
            raise FormatError("duplicate term", at)
        out[(i, j)] = _coeff(term["coeff"], f"{at}.coeff")
    return KinTensor(n, slots, out)


def tensor_to_dict(t):
    t = _dn_basis(t)
    terms = []
    for (i, j), c in t.items():
        terms.append({
            "k": i.k, "q": i.q, "family": i.family,
            "k2": j.k, "q2": j.q, "family2": j.family,
            "coeff": [{"num": str(v.numerator), "den": str(v.denominator), "halfpi": hp, "lambda": lam}
                      for (lam, hp), v in c.items()],
        })
    return {"n": t.n, "slots": list(t.slots), "terms": terms}


def _dn_basis(t):
    if all(tag == "val" for tag in t.slots):
        return t
    return t.apply(*(from_B_basis if tag == "area" else (lambda x: x) for tag in t.slots))


def dumps_tensor(t):
    return json.dumps(tensor_to_dict(t), indent=1) + "\n"


def save_tensor(t, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_tensor(t))


def load_tensor(path, expect_slots=None):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None
    return tensor_from_dict(doc, expect_slots)


def load_kchi(path):
    """Read a Val (x) Val kinematic tensor; degree pairing ``k + k2 = 2n`` is enforced."""
    return load_tensor(path, ("val", "val"))
