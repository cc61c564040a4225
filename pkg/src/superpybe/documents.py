"""JSON documents for algebras, representations, maps, tensors and forms.

Every document is ``{"kind": ..., "version": 1, "payload": {...}}``.  Scalars
are integers or strings ``"p/q"``; floating point tokens are refused.  The
canonical text has sorted keys, two-space indentation and rationals in
lowest terms.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import jsonschema

from .graded import GradedSpace, GradingError, LinearMap, TensorElement
from .linalg import ZERO
from .operators import BilinearForm
from .representation import Representation
from .superalgebra import SuperAlgebra

VERSION = 1
KINDS = ("algebra", "representation", "linear_map", "tensor", "form")


class DocumentError(ValueError):
    pass


class MalformedDocument(DocumentError):
    """Syntax error; the message carries the position."""


class SchemaViolation(DocumentError):
    """Well-formed JSON that does not match the schema; the message names the field."""


class HomogeneityViolation(DocumentError):
    """Entries that break parity homogeneity; the message names the indices."""


_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(/[0-9]+)?$")

_rational = {"oneOf": [{"type": "integer"},
                       {"type": "string", "pattern": _RATIONAL_RE.pattern}]}
_basis = {"type": "array", "minItems": 1, "items": {
    "type": "object", "required": ["name", "parity"], "additionalProperties": False,
    "properties": {"name": {"type": "string", "minLength": 1}, "parity": {"enum": [0, 1]}}}}
_rows = {"type": "array", "items": {"type": "array", "items": _rational}}
_table = {"type": "array", "items": {
    "type": "object", "required": ["left", "right", "out"], "additionalProperties": False,
    "properties": {"left": {"type": "string"}, "right": {"type": "string"},
                   "out": {"type": "array", "items": {
                       "type": "object", "required": ["basis", "coeff"], "additionalProperties": False,
                       "properties": {"basis": {"type": "string"}, "coeff": _rational}}}}}}
_algebra = {"type": "object", "required": ["basis", "product", "bracket"], "additionalProperties": False,
            "properties": {"basis": _basis, "product": _table, "bracket": _table,
                           "name": {"type": "string"}}}
_maps = {"type": "object", "additionalProperties": _rows}

PAYLOAD_SCHEMAS = {
    "algebra": _algebra,
    "representation": {
        "type": "object", "required": ["module", "L", "R", "rho"], "additionalProperties": False,
        "properties": {"module": _basis, "L": _maps, "R": _maps, "rho": _maps,
                       "algebra": _algebra, "name": {"type": "string"}}},
    "linear_map": {
        "type": "object", "required": ["parity", "domain", "codomain", "rows"],
        "additionalProperties": False,
        "properties": {"parity": {"enum": [0, 1]}, "domain": _basis, "codomain": _basis, "rows": _rows}},
    "tensor": {
        "type": "object", "required": ["parity", "terms"], "additionalProperties": False,
        "properties": {"parity": {"enum": [0, 1]}, "basis": _basis, "terms": {"type": "array", "items": {
            "type": "object", "required": ["left", "right", "coeff"], "additionalProperties": False,
            "properties": {"left": {"type": "string"}, "right": {"type": "string"}, "coeff": _rational}}}}},
    "form": {
        "type": "object", "required": ["rows"], "additionalProperties": False,
        "properties": {"basis": _basis, "rows": _rows}},
}

ENVELOPE = {"type": "object", "required": ["kind", "version", "payload"], "additionalProperties": False,
            "properties": {"kind": {"enum": list(KINDS)}, "version": {"const": VERSION},
                           "payload": {"type": "object"}}}


def format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_scalar(token, where: str = "") -> Fraction:
    if isinstance(token, bool) or not isinstance(token, (int, str)):
        raise SchemaViolation(f"{where or 'scalar'}: expected an integer or 'p/q' string, got {token!r}")
    if isinstance(token, str):
        if not _RATIONAL_RE.match(token):
            raise SchemaViolation(f"{where or 'scalar'}: {token!r} is not a rational")
        if "/" in token and int(token.split("/")[1]) == 0:
            raise SchemaViolation(f"{where or 'scalar'}: zero denominator")
    return Fraction(token)


@dataclass(frozen=True)
class Document:
    kind: str
    version: int
    payload: dict


def _reject_float(token: str):
    raise MalformedDocument(f"floating point token {token!r} is not accepted")


def _path(error: jsonschema.ValidationError, prefix: str) -> str:
    parts = [prefix] + [str(p) for p in error.absolute_path]
    return "/".join(parts)


def _normalize(obj: Any, path: str = "") -> Any:
    """Rewrite every rational-looking leaf in canonical form."""
    if isinstance(obj, dict):
        return {k: (_normalize(v, f"{path}/{k}") if k not in ("name", "left", "right", "basis", "kind")
                    or isinstance(v, (list, dict)) else v)
                for k, v in obj.items()}
    if isinstance(obj, list):
        return [_normalize(v, f"{path}/{i}") for i, v in enumerate(obj)]
    if isinstance(obj, str) and _RATIONAL_RE.match(obj):
        return format_scalar(parse_scalar(obj, path))
    if isinstance(obj, int) and not isinstance(obj, bool) and path.rsplit("/", 1)[-1] != "parity":
        return format_scalar(Fraction(obj))
    return obj


def parse(text: str) -> Document:
    try:
        raw = json.loads(text, parse_float=_reject_float,
                         parse_constant=lambda t: _reject_float(t))
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        jsonschema.validate(raw, ENVELOPE)
    except jsonschema.ValidationError as exc:
        raise SchemaViolation(f"{_path(exc, '')}: {exc.message}") from None
    kind = raw["kind"]
    try:
        jsonschema.validate(raw["payload"], PAYLOAD_SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        raise SchemaViolation(f"{_path(exc, 'payload')}: {exc.message}") from None
    doc = Document(kind, raw["version"], _normalize(raw["payload"], "payload"))
    _semantic_check(doc)
    return doc


def serialize(doc: Document) -> str:
    return json.dumps({"kind": doc.kind, "version": doc.version, "payload": doc.payload},
                      sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _semantic_check(doc: Document):
    """Run the conversion that applies for self-contained documents."""
    p = doc.payload
    if doc.kind == "algebra":
        to_algebra(doc)
    elif doc.kind == "linear_map":
        to_linear_map(doc)
    elif doc.kind == "tensor" and "basis" in p:
        to_tensor(doc)
    elif doc.kind == "representation" and "algebra" in p:
        to_representation(doc)
    elif doc.kind == "form" and "basis" in p:
        to_form(doc)


def _space(basis: list, where: str) -> GradedSpace:
    try:
        return GradedSpace(tuple((b["name"], b["parity"]) for b in basis))
    except ValueError as exc:
        raise SchemaViolation(f"{where}: {exc}") from None


def _basis_payload(space: GradedSpace) -> list:
    return [{"name": n, "parity": p} for n, p in space.basis]


def _lookup(space: GradedSpace, name: str, where: str) -> int:
    try:
        return space.index(name)
    except KeyError:
        raise SchemaViolation(f"{where}: unknown basis element {name!r}") from None


def _matrix(rows: list, nrows: int, ncols: int, where: str):
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise SchemaViolation(f"{where}: expected a {nrows}x{ncols} matrix")
    return [[parse_scalar(x, f"{where}/{i}/{j}") for j, x in enumerate(r)] for i, r in enumerate(rows)]


def _check_kind(doc: Document, kind: str):
    if doc.kind != kind:
        raise SchemaViolation(f"kind: expected {kind!r}, got {doc.kind!r}")


# -- algebras ---------------------------------------------------------------

def _algebra_from_payload(p: dict, where: str) -> SuperAlgebra:
    space = _space(p["basis"], f"{where}/basis")
    n = space.dim
    cubes = {}
    for label in ("product", "bracket"):
        cube = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        seen = set()
        for t, entry in enumerate(p[label]):
            at = f"{where}/{label}/{t}"
            i = _lookup(space, entry["left"], f"{at}/left")
            j = _lookup(space, entry["right"], f"{at}/right")
            if (i, j) in seen:
                raise SchemaViolation(f"{at}: duplicate entry for ({entry['left']}, {entry['right']})")
            seen.add((i, j))
            for u, out in enumerate(entry["out"]):
                k = _lookup(space, out["basis"], f"{at}/out/{u}/basis")
                c = parse_scalar(out["coeff"], f"{at}/out/{u}/coeff")
                if c and space.parity(k) != (space.parity(i) + space.parity(j)) % 2:
                    raise HomogeneityViolation(
                        f"{at}: {label} of ({entry['left']}, {entry['right']}) has a component on "
                        f"{out['basis']} of the wrong parity (indices {i},{j},{k})")
                cube[i][j][k] += c
        cubes[label] = cube
    return SuperAlgebra(space, cubes["product"], cubes["bracket"], p.get("name", ""))


def to_algebra(doc: Document) -> SuperAlgebra:
    _check_kind(doc, "algebra")
    return _algebra_from_payload(doc.payload, "payload")


def _algebra_payload(A: SuperAlgebra) -> dict:
    names = A.space.names
    n = A.dim
    out = {"basis": _basis_payload(A.space)}
    for label, cube in (("product", A.product), ("bracket", A.bracket)):
        out[label] = [{"left": names[i], "right": names[j],
                       "out": [{"basis": names[k], "coeff": format_scalar(c)}
                               for k, c in enumerate(cube[i][j]) if c]}
                      for i in range(n) for j in range(n) if any(cube[i][j])]
    if A.name:
        out["name"] = A.name
    return out


def algebra_document(A: SuperAlgebra) -> Document:
    return Document("algebra", VERSION, _algebra_payload(A))


# -- linear maps --------------------------------------------------------------

def _rows_payload(m) -> list:
    return [[format_scalar(x) for x in row] for row in m]


def to_linear_map(doc: Document) -> LinearMap:
    _check_kind(doc, "linear_map")
    p = doc.payload
    dom = _space(p["domain"], "payload/domain")
    cod = _space(p["codomain"], "payload/codomain")
    m = _matrix(p["rows"], cod.dim, dom.dim, "payload/rows")
    try:
        return LinearMap(dom, cod, p["parity"], m)
    except GradingError as exc:
        raise HomogeneityViolation(f"payload/rows: {exc}") from None


def linear_map_document(T: LinearMap) -> Document:
    return Document("linear_map", VERSION, {
        "parity": T.parity, "domain": _basis_payload(T.domain),
        "codomain": _basis_payload(T.codomain), "rows": _rows_payload(T.matrix)})


# -- tensors ------------------------------------------------------------------

def to_tensor(doc: Document, space: GradedSpace | None = None) -> TensorElement:
    _check_kind(doc, "tensor")
    p = doc.payload
    if "basis" in p:
        own = _space(p["basis"], "payload/basis")
        if space is not None and own != space:
            raise SchemaViolation("payload/basis: does not match the algebra basis")
        space = own
    if space is None:
        raise SchemaViolation("payload/basis: required when no algebra is given")
    n = space.dim
    rows = [[ZERO] * n for _ in range(n)]
    for t, term in enumerate(p["terms"]):
        at = f"payload/terms/{t}"
        i = _lookup(space, term["left"], f"{at}/left")
        j = _lookup(space, term["right"], f"{at}/right")
        c = parse_scalar(term["coeff"], f"{at}/coeff")
        if c and (space.parity(i) + space.parity(j)) % 2 != p["parity"]:
            raise HomogeneityViolation(
                f"{at}: term ({term['left']}, {term['right']}) at index pair ({i},{j}) "
                f"has parity {(space.parity(i) + space.parity(j)) % 2}, declared {p['parity']}")
        rows[i][j] += c
    return TensorElement(space, rows, p["parity"])


def tensor_document(r: TensorElement, with_basis: bool = True) -> Document:
    names = r.space.names
    payload = {"parity": r.parity,
               "terms": [{"left": names[i], "right": names[j], "coeff": format_scalar(c)}
                         for i, j, c in r.terms()]}
    if with_basis:
        payload["basis"] = _basis_payload(r.space)
    return Document("tensor", VERSION, payload)


# -- forms --------------------------------------------------------------------

def to_form(doc: Document, space: GradedSpace | None = None) -> BilinearForm:
    _check_kind(doc, "form")
    p = doc.payload
    if "basis" in p:
        own = _space(p["basis"], "payload/basis")
        if space is not None and own != space:
            raise SchemaViolation("payload/basis: does not match the algebra basis")
        space = own
    if space is None:
        raise SchemaViolation("payload/basis: required when no algebra is given")
    return BilinearForm(space, _matrix(p["rows"], space.dim, space.dim, "payload/rows"))


def form_document(B: BilinearForm) -> Document:
    return Document("form", VERSION, {"basis": _basis_payload(B.space), "rows": _rows_payload(B.matrix)})


# -- representations ----------------------------------------------------------

def to_representation(doc: Document, algebra: SuperAlgebra | None = None) -> Representation:
    _check_kind(doc, "representation")
    p = doc.payload
    if "algebra" in p:
        own = _algebra_from_payload(p["algebra"], "payload/algebra")
        if algebra is not None and own != algebra:
            raise SchemaViolation("payload/algebra: does not match the given algebra")
        algebra = own
    if algebra is None:
        raise SchemaViolation("payload/algebra: required when no algebra is given")
    module = _space(p["module"], "payload/module")
    P = algebra.space
    families = {}
    for label in ("L", "R", "rho"):
        table = p[label]
        unknown = set(table) - set(P.names)
        if unknown:
            raise SchemaViolation(f"payload/{label}: unknown algebra basis element {sorted(unknown)[0]!r}")
        maps = []
        for a, name in enumerate(P.names):
            at = f"payload/{label}/{name}"
            if name in table:
                m = _matrix(table[name], module.dim, module.dim, at)
            else:
                m = [[ZERO] * module.dim for _ in range(module.dim)]
            try:
                maps.append(LinearMap(module, module, P.parity(a), m))
            except GradingError as exc:
                raise HomogeneityViolation(f"{at}: {exc}") from None
        families[label] = tuple(maps)
    return Representation(algebra, module, families["L"], families["R"], families["rho"],
                          p.get("name", ""))


def representation_document(rep: Representation, embed_algebra: bool = True) -> Document:
    P = rep.algebra.space
    payload = {"module": _basis_payload(rep.module)}
    for label in ("L", "R", "rho"):
        payload[label] = {P.names[a]: _rows_payload(m.matrix)
                          for a, m in enumerate(getattr(rep, label)) if not m.is_zero()}
    if embed_algebra:
        payload["algebra"] = _algebra_payload(rep.algebra)
    if rep.name:
        payload["name"] = rep.name
    return Document("representation", VERSION, payload)
