"""JSON category files and exact scalar encodings.

A category file is a JSON object::

    {"name": "fibonacci", "field": "cyclotomic:5",
     "labels": ["1", "t"], "unit": "1", "dual": {"1": "1", "t": "t"},
     "fusion": [["1", "1", "1"], ...],
     "F": [{"a": "t", "b": "t", "c": "t", "d": "t", "e": "1", "f": "1", "value": ...}, ...]}

Scalar encodings: rationals as ``"p/q"`` strings (integers allowed),
cyclotomic elements as ``{"zeta": n, "coeffs": [...]}`` in the power basis
(any length; reduced on load), prime-field elements as ``{"mod": p, "val": m}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .category import FSymbolTable, pentagon_check
from .errors import CategoryValidationError, ParseError
from .fusion_ring import validate_ring
from .scalars import FieldSpec, Scalar, cyclotomic_reduce

__all__ = [
    "encode_scalar",
    "decode_scalar",
    "category_to_dict",
    "category_from_dict",
    "export_category",
    "load_category",
    "loads_category",
]


def encode_scalar(x: Scalar):
    kind = x.field.kind
    if kind == "rational":
        return str(x.value)
    if kind == "prime":
        return {"mod": x.field.p, "val": x.value}
    return {"zeta": x.field.order, "coeffs": [str(c) for c in x.coefficients()]}


def _fraction(v, where: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"{where}: expected an integer or 'p/q' string, got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: malformed rational {v!r}") from None


def decode_scalar(obj, field: FieldSpec, where: str = "scalar") -> Scalar:
    """Decode ``obj`` into ``field``; rationals are accepted in every field."""
    if isinstance(obj, dict):
        if set(obj) == {"zeta", "coeffs"}:
            if field.kind != "cyclotomic" or obj["zeta"] != field.order:
                raise ParseError(f"{where}: cyclotomic:{obj['zeta']} scalar in a {field} file")
            if not isinstance(obj["coeffs"], list) or not obj["coeffs"]:
                raise ParseError(f"{where}: coeffs must be a non-empty list")
            coeffs = [_fraction(c, where) for c in obj["coeffs"]]
            return cyclotomic_reduce(coeffs, field.order)
        if set(obj) == {"mod", "val"}:
            if field.kind != "prime" or obj["mod"] != field.p:
                raise ParseError(f"{where}: prime:{obj['mod']} scalar in a {field} file")
            if isinstance(obj["val"], bool) or not isinstance(obj["val"], int):
                raise ParseError(f"{where}: val must be an integer")
            return field(obj["val"])
        raise ParseError(f"{where}: unrecognised scalar object {obj!r}")
    try:
        return field(_fraction(obj, where))
    except ZeroDivisionError:
        raise ParseError(f"{where}: {obj!r} is undefined in {field}") from None


def category_to_dict(F: FSymbolTable) -> dict:
    ring = F.ring
    nm = ring.labels
    return {
        "name": F.name,
        "field": str(F.field),
        "labels": list(nm),
        "unit": nm[ring.unit],
        "dual": {nm[i]: nm[ring.dual[i]] for i in range(ring.rank)},
        "fusion": [[nm[i], nm[j], nm[k]] for i, j, k in sorted(ring.triples)],
        "F": [
            {**dict(zip("abcdef", (nm[i] for i in key))), "value": encode_scalar(F.F[key])}
            for key in sorted(F.F)
        ],
    }


def export_category(F: FSymbolTable, path=None) -> str:
    doc = category_to_dict(F)
    parts = []
    for key, value in doc.items():
        head = f"  {json.dumps(key)}: "
        if isinstance(value, list) and key in ("fusion", "F"):
            items = ",\n".join("    " + json.dumps(v, ensure_ascii=False) for v in value)
            parts.append(head + "[\n" + items + "\n  ]")
        else:
            parts.append(head + json.dumps(value, ensure_ascii=False))
    text = "{\n" + ",\n".join(parts) + "\n}\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def _require(doc, key, kind):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    if not isinstance(doc[key], kind):
        raise ParseError(f"field {key!r} has the wrong type")
    return doc[key]


def category_from_dict(doc, check_pentagon: bool = True) -> FSymbolTable:
    if not isinstance(doc, dict):
        raise ParseError("a category file must hold a JSON object")
    try:
        field = FieldSpec.parse(_require(doc, "field", str))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    labels = [str(x) for x in _require(doc, "labels", list)]
    index = {n: i for i, n in enumerate(labels)}

    def idx(name, where):
        if name not in index:
            raise ParseError(f"{where}: unknown label {name!r}")
        return index[name]

    unit = idx(_require(doc, "unit", str), "unit")
    dual_doc = _require(doc, "dual", (dict, list))
    if isinstance(dual_doc, list):
        dual_doc = dict(zip(labels, dual_doc))
    dual = [idx(dual_doc.get(n), f"dual of {n}") for n in labels]
    triples = []
    for t in _require(doc, "fusion", list):
        if not isinstance(t, list) or len(t) != 3:
            raise ParseError(f"fusion triple {t!r} must list three labels")
        triples.append(tuple(idx(n, f"fusion triple {t}") for n in t))
    ring = validate_ring(labels=labels, unit=unit, dual=dual, N=triples)
    entries = {}
    for n, item in enumerate(_require(doc, "F", list)):
        where = f"F entry {n}"
        if not isinstance(item, dict) or any(k not in item for k in ("a", "b", "c", "d", "e", "f", "value")):
            raise ParseError(f"{where}: needs a, b, c, d, e, f and value")
        key = tuple(idx(item[k], where) for k in "abcdef")
        if key in entries:
            raise ParseError(f"{where}: duplicate entry {tuple(item[k] for k in 'abcdef')}")
        entries[key] = decode_scalar(item["value"], field, where)
    F = FSymbolTable.build(ring, field, entries, name=str(doc.get("name", "custom")))
    if check_pentagon:
        report = pentagon_check(F)
        if not report:
            raise CategoryValidationError("pentagon", report.witness, str(report))
    return F


def loads_category(text: str, check_pentagon: bool = True) -> FSymbolTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return category_from_dict(doc, check_pentagon)


def load_category(path, check_pentagon: bool = True) -> FSymbolTable:
    """Read and fully validate a category file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads_category(text, check_pentagon)
