"""Order, ideal and report documents.

Documents are JSON objects whose integers are decimal strings. Writing is
byte-deterministic: keys are sorted and the layout is fixed.

Order document::

    {"poly": ["1", "0", "1"],
     "basis_num": [["1", "0"], ["0", "2"]], "basis_den": "1",
     "assume_irreducible": false,
     "normalization": {"basis_num": [...], "basis_den": "1"}}   # optional

Ideal document: ``{"order": <order document>, "basis_num": ..., "basis_den": ...}``.
"""

import csv
import hashlib
import json
from dataclasses import dataclass

from .errors import NormringError, NotNormalization, ParseError, ValidationError
from .field import Order, field_create
from .ideal import FracIdeal
from .lattice import HnfLattice

__all__ = [
    "OrderDocument",
    "dumps",
    "order_to_doc",
    "order_from_doc",
    "ideal_to_doc",
    "ideal_from_doc",
    "load_order",
    "load_order_document",
    "save_order",
    "load_ideal",
    "save_ideal",
    "save_report",
    "save_csv",
    "digest",
]


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _lattice_doc(lat):
    return {"basis_num": [[str(x) for x in r] for r in lat.basis], "basis_den": str(lat.den)}


def order_to_doc(R, normalization=None):
    K = R.field
    doc = {
        "poly": [str(c) for c in K.coeffs],
        "assume_irreducible": K.certificate.method == "assumed",
        **_lattice_doc(R.lattice),
    }
    if normalization is not None:
        doc["normalization"] = _lattice_doc(normalization.lattice)
    return doc


def digest(R):
    return hashlib.sha256(dumps(order_to_doc(R)).encode()).hexdigest()


def _int(value, path):
    if not isinstance(value, str):
        raise ParseError(f"{path}: expected a decimal string, got {type(value).__name__}")
    try:
        return int(value, 10)
    except ValueError:
        raise ParseError(f"{path}: {value!r} is not a decimal integer") from None


def _int_list(value, path):
    if not isinstance(value, list):
        raise ParseError(f"{path}: expected a list")
    return [_int(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _parse_lattice(doc, path, n):
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected an object")
    for key in ("basis_num", "basis_den"):
        if key not in doc:
            raise ParseError(f"{path}.{key}: missing")
    rows = doc["basis_num"]
    if not isinstance(rows, list):
        raise ParseError(f"{path}.basis_num: expected a list of rows")
    rows = [_int_list(r, f"{path}.basis_num[{i}]") for i, r in enumerate(rows)]
    den = _int(doc["basis_den"], f"{path}.basis_den")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValidationError(f"{path}.basis_num", f"expected a {n}x{n} matrix")
    if den <= 0:
        raise ValidationError(f"{path}.basis_den", "must be positive")
    try:
        lat = HnfLattice.from_rows(rows, den)
    except NormringError as e:
        raise ValidationError(f"{path}.basis_num", f"{type(e).__name__}: {e}") from None
    canonical = [list(r) for r in lat.basis] == rows and lat.den == den
    return lat, not canonical


@dataclass(frozen=True)
class OrderDocument:
    order: Order
    normalization: Order = None
    recanonicalized: bool = False


def order_from_doc(doc, path="order"):
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected an object")
    if "poly" not in doc:
        raise ParseError(f"{path}.poly: missing")
    poly = _int_list(doc["poly"], f"{path}.poly")
    assume = doc.get("assume_irreducible", False)
    if not isinstance(assume, bool):
        raise ParseError(f"{path}.assume_irreducible: expected a boolean")
    try:
        K = field_create(poly, assume_irreducible=assume)
    except NormringError as e:
        raise ValidationError(f"{path}.poly", f"{type(e).__name__}: {e}") from None
    lat, flagged = _parse_lattice(doc, path, K.degree)
    try:
        R = Order.from_lattice(K, lat)
    except NormringError as e:
        raise ValidationError(f"{path}.basis_num", f"{type(e).__name__}: {e}") from None
    Rt = None
    if "normalization" in doc:
        from .normalization import validate_normalization

        nlat, nflag = _parse_lattice(doc["normalization"], f"{path}.normalization", K.degree)
        flagged |= nflag
        try:
            Rt = Order.from_lattice(K, nlat)
            validate_normalization(R, Rt)
        except NotNormalization as e:
            raise ValidationError(f"{path}.normalization", f"NotNormalization: {e}") from None
        except NormringError as e:
            raise ValidationError(f"{path}.normalization", f"{type(e).__name__}: {e}") from None
    return OrderDocument(R, Rt, flagged)


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e}") from None


def load_order_document(path):
    return order_from_doc(_read_json(path))


def load_order(path):
    """Load, re-canonicalize and validate an order file."""
    return load_order_document(path).order


def save_order(R, path, normalization=None):
    _write(path, dumps(order_to_doc(R, normalization)))


def ideal_to_doc(I):
    return {"order": order_to_doc(I.order), **_lattice_doc(I.lattice)}


def ideal_from_doc(doc, path="ideal"):
    if not isinstance(doc, dict) or "order" not in doc:
        raise ParseError(f"{path}.order: missing")
    R = order_from_doc(doc["order"], f"{path}.order").order
    lat, _ = _parse_lattice(doc, path, R.degree)
    try:
        return FracIdeal.from_lattice(R, lat)
    except NormringError as e:
        raise ValidationError(f"{path}.basis_num", f"{type(e).__name__}: {e}") from None


def load_ideal(path):
    return ideal_from_doc(_read_json(path))


def save_ideal(I, path):
    _write(path, dumps(ideal_to_doc(I)))


def save_report(report, path):
    _write(path, dumps(report.to_dict()))


def save_csv(report, path):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        csv.writer(fh, lineterminator="\n").writerows(report.csv_rows())


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
