"""JSON documents <-> library objects.

Factorization documents look like::

    {"genus": 4, "items": [
        {"kind": "bp", "sign": 1, "class": [...], "basis": [[a1, b1], ...]},
        {"kind": "sep", "sign": 1, "basis": [[a1, b1], ...]},
        {"kind": "sip", "sign": 1, "boundary": [w, x, y, z], "five_bp": [...], "two_bp": [null, {...}]},
        {"kind": "ssip", "sign": 1, "curve": {"basis": ...}, "image": {"basis": ...}}]}

Homology classes are integer arrays of length 2g.  As a convenience a string
such as ``"a2-a3+a4"`` is accepted wherever an array is.
"""

from __future__ import annotations

from typing import Any

from .calculus import BPData, Item, SepTwistData, SIPData, SSIPData, TorelliFactorization
from .errors import SchemaError
from .homology import HClass, SurfaceConfig


def parse_class(raw: Any, genus: int) -> HClass:
    surface = SurfaceConfig(genus)
    if isinstance(raw, str):
        try:
            return surface.parse(raw)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
    if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise SchemaError(f"homology class must be an integer array, got {raw!r}")
    if len(raw) != 2 * genus:
        raise SchemaError(f"homology class {raw!r} must have length {2 * genus}")
    return surface.vector(raw)


def _pairs(raw: Any, genus: int) -> tuple[tuple[HClass, HClass], ...]:
    if raw is None:
        return ()
    if not isinstance(raw, list):
        raise SchemaError("basis must be a list of [a_i, b_i] pairs")
    out = []
    for pair in raw:
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"basis entry {pair!r} is not a pair")
        out.append((parse_class(pair[0], genus), parse_class(pair[1], genus)))
    return tuple(out)


def _sign(raw: dict) -> int:
    sign = raw.get("sign", 1)
    if sign not in (1, -1):
        raise SchemaError(f"sign must be 1 or -1, got {sign!r}")
    return sign


def _require(raw: dict, key: str):
    if key not in raw:
        raise SchemaError(f"missing field {key!r} in {raw.get('kind', 'item')} item")
    return raw[key]


def parse_bp(raw: dict, genus: int) -> BPData:
    if not isinstance(raw, dict):
        raise SchemaError(f"bounding pair must be an object, got {raw!r}")
    return BPData(parse_class(_require(raw, "class"), genus), _pairs(raw.get("basis"), genus), _sign(raw))


def parse_sep(raw: dict, genus: int) -> SepTwistData:
    return SepTwistData(genus, _pairs(raw.get("basis"), genus), _sign(raw))


def parse_item(raw: Any, genus: int) -> Item:
    if not isinstance(raw, dict):
        raise SchemaError(f"item must be an object, got {raw!r}")
    kind = raw.get("kind")
    if kind == "bp":
        return parse_bp(raw, genus)
    if kind == "sep":
        return parse_sep(raw, genus)
    if kind == "sip":
        boundary = _require(raw, "boundary")
        if not isinstance(boundary, list) or len(boundary) != 4:
            raise SchemaError("sip boundary must list four classes")
        five = raw.get("five_bp")
        two = raw.get("two_bp")
        return SIPData(
            tuple(parse_class(v, genus) for v in boundary),
            None if five is None else tuple(parse_bp(bp, genus) for bp in five),
            None if two is None else tuple(None if bp is None else parse_bp(bp, genus) for bp in two),
            _sign(raw),
        )
    if kind == "ssip":
        return SSIPData(parse_sep(_require(raw, "curve"), genus), parse_sep(_require(raw, "image"), genus),
                        _sign(raw))
    raise SchemaError(f"unknown item kind {kind!r}")


def parse_factorization(doc: Any, genus: int | None = None) -> TorelliFactorization:
    if not isinstance(doc, dict):
        raise SchemaError("factorization document must be an object")
    doc_genus = doc.get("genus", genus)
    if doc_genus is None:
        raise SchemaError("factorization document needs a genus")
    if not isinstance(doc_genus, int) or doc_genus < 1:
        raise SchemaError(f"bad genus {doc_genus!r}")
    if genus is not None and genus != doc_genus:
        raise SchemaError(f"--genus {genus} disagrees with document genus {doc_genus}")
    items = doc.get("items", [])
    if not isinstance(items, list):
        raise SchemaError("items must be a list")
    return TorelliFactorization(doc_genus, tuple(parse_item(it, doc_genus) for it in items))


def _pairs_json(basis) -> list:
    return [[a.to_json(), b.to_json()] for a, b in basis]


def bp_to_json(bp: BPData) -> dict:
    return {"kind": "bp", "sign": bp.sign, "class": bp.pair_class.to_json(), "basis": _pairs_json(bp.basis)}


def item_to_json(item: Item) -> dict:
    if isinstance(item, BPData):
        return bp_to_json(item)
    if isinstance(item, SepTwistData):
        return {"kind": "sep", "sign": item.sign, "basis": _pairs_json(item.basis)}
    if isinstance(item, SIPData):
        out = {"kind": "sip", "sign": item.sign, "boundary": [v.to_json() for v in item.boundary]}
        if item.five_bp is not None:
            out["five_bp"] = [bp_to_json(bp) for bp in item.five_bp]
        if item.two_bp is not None:
            out["two_bp"] = [None if bp is None else bp_to_json(bp) for bp in item.two_bp]
        return out
    if isinstance(item, SSIPData):
        return {"kind": "ssip", "sign": item.sign,
                "curve": {"basis": _pairs_json(item.curve.basis)},
                "image": {"basis": _pairs_json(item.image.basis)}}
    raise TypeError(f"not a Torelli generator: {item!r}")


def factorization_to_json(f: TorelliFactorization) -> dict:
    return {"genus": f.genus, "items": [item_to_json(it) for it in f.items]}
