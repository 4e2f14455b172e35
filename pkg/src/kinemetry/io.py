"""JSON documents for convex bodies and sphere regions."""

import json
import math

from .convex.bodies import Ball, Polygon, Polytope3, SupportBody2
from .convex.regions import FULL, Arcs, Cap, Caps, FullSphere
from .errors import FormatError, ValidationError


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise FormatError("expected a finite number", where)
    return float(x)


def _numbers(xs, where, length=None):
    if not isinstance(xs, list):
        raise FormatError("expected a list of numbers", where)
    if length is not None and len(xs) != length:
        raise FormatError(f"expected {length} numbers", where)
    return [_number(x, f"{where}[{i}]") for i, x in enumerate(xs)]


def _points(xs, where, dim):
    if not isinstance(xs, list):
        raise FormatError("expected a list of points", where)
    return [_numbers(p, f"{where}[{i}]", dim) for i, p in enumerate(xs)]


def _require(doc, fields, where="$"):
    if not isinstance(doc, dict):
        raise FormatError("expected an object", where)
    missing = [f for f in fields if f not in doc]
    if missing:
        raise FormatError(f"missing field(s) {missing}", where)


def body_from_dict(doc):
    _require(doc, ["type"])
    kind = doc["type"]
    try:
        if kind == "polygon":
            _require(doc, ["vertices"])
            return Polygon(_points(doc["vertices"], "vertices", 2))
        if kind == "polytope3":
            _require(doc, ["vertices", "faces"])
            faces = doc["faces"]
            if not isinstance(faces, list) or not all(
                    isinstance(f, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in f) for f in faces):
                raise FormatError("faces must be lists of vertex indices", "faces")
            return Polytope3(_points(doc["vertices"], "vertices", 3), faces)
        if kind == "ball":
            _require(doc, ["dim", "center", "radius"])
            dim = doc["dim"]
            if dim not in (2, 3) or isinstance(dim, bool):
                raise FormatError("dim must be 2 or 3", "dim")
            return Ball(_numbers(doc["center"], "center", dim), _number(doc["radius"], "radius"))
        if kind == "support2d":
            _require(doc, ["a0"])
            return SupportBody2(_number(doc["a0"], "a0"), _numbers(doc.get("cos", []), "cos"),
                                _numbers(doc.get("sin", []), "sin"))
    except FormatError:
        raise
    except ValidationError as exc:
        raise FormatError(str(exc), "$") from None
    raise FormatError(f"unknown body type {kind!r}", "type")


def body_to_dict(body):
    if isinstance(body, Polygon):
        return {"type": "polygon", "vertices": body.vertices.tolist()}
    if isinstance(body, Polytope3):
        return {"type": "polytope3", "vertices": body.vertices.tolist(), "faces": [list(f) for f in body.faces]}
    if isinstance(body, Ball):
        return {"type": "ball", "dim": body.dim, "center": body.center.tolist(), "radius": body.radius}
    if isinstance(body, SupportBody2):
        return {"type": "support2d", "a0": body.a0, "cos": body.cos.tolist(), "sin": body.sin.tolist()}
    raise ValidationError(f"cannot serialize {type(body).__name__}")


def region_from_dict(doc):
    _require(doc, ["type"])
    kind = doc["type"]
    try:
        if kind == "full":
            return FULL
        if kind == "arcs":
            _require(doc, ["arcs"])
            return Arcs([_numbers(a, f"arcs[{i}]", 2) for i, a in enumerate(_list(doc["arcs"], "arcs"))])
        if kind == "caps":
            _require(doc, ["caps"])
            caps = []
            for i, c in enumerate(_list(doc["caps"], "caps")):
                _require(c, ["axis", "angle"], f"caps[{i}]")
                caps.append(Cap(_numbers(c["axis"], f"caps[{i}].axis", 3), _number(c["angle"], f"caps[{i}].angle")))
            return Caps(caps)
    except FormatError:
        raise
    except ValidationError as exc:
        raise FormatError(str(exc), "$") from None
    raise FormatError(f"unknown region type {kind!r}", "type")


def _list(x, where):
    if not isinstance(x, list):
        raise FormatError("expected a list", where)
    return x


def region_to_dict(region):
    if isinstance(region, FullSphere):
        return {"type": "full"}
    if isinstance(region, Arcs):
        return {"type": "arcs", "arcs": [list(b) for b in region.bounds()]}
    if isinstance(region, Caps):
        return {"type": "caps", "caps": [{"axis": list(map(float, c.axis)), "angle": c.angle} for c in region.caps]}
    raise ValidationError(f"cannot serialize {type(region).__name__}")


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None


def _located(path, loader):
    try:
        return loader(_read(path))
    except FormatError as exc:
        raise FormatError(str(exc), str(path)) from None


def load_body(path):
    return _located(path, body_from_dict)


def load_region(path):
    return _located(path, region_from_dict)
