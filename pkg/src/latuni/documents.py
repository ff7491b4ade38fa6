"""JSON document formats, table rendering, and DOT export.

Three document kinds:

* lattice document: ``{"elements": [...], "covers": [[lo, hi], ...],
  "bottom": id, "top": id}``
* operator document: ``{"kind": "closure"|"interior", "map": {id: id}}``
  or ``{"kind": ..., "preset": "identity"|"join-with:<k>"|"meet-with:<k>"}``
* binop document: ``{"neutral": id, "domain": {"low": id, "high": id}?,
  "table": {row: {col: id}}}``

Element order inside documents is semantic: it fixes scan, witness, and
rendering order, so canonical serialization preserves it.
"""

from __future__ import annotations

import json

from .binop import FullBinOpTable, PartialBinOpTable, validate_partial
from .errors import ParseError, ReferenceToUnknownElement
from .lattice import BoundedLattice, IntervalSpec, build_lattice
from .unary import UnaryOpTable, validate_unary


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("document root must be a JSON object")
    return doc


def _require_keys(doc: dict, keys) -> None:
    for key in keys:
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")


# -- lattice documents -------------------------------------------------------

def parse_lattice(text: str) -> BoundedLattice:
    doc = _load_json(text)
    _require_keys(doc, ("elements", "covers", "bottom", "top"))
    elements = list(doc["elements"])
    known = set(elements)
    covers = []
    for pair in doc["covers"]:
        if len(pair) != 2:
            raise ParseError(f"cover entry {pair!r} is not a pair")
        lo, hi = pair
        if lo not in known or hi not in known:
            raise ReferenceToUnknownElement(f"cover {pair!r} references an unknown element")
        covers.append((lo, hi))
    for key in ("bottom", "top"):
        if doc[key] not in known:
            raise ReferenceToUnknownElement(f"{key} {doc[key]!r} is not a declared element")
    return build_lattice(elements, covers, doc["bottom"], doc["top"])


def serialize_lattice(lat: BoundedLattice) -> str:
    doc = {
        "elements": list(lat.elements),
        "covers": [list(c) for c in lat.covers],
        "bottom": lat.bottom,
        "top": lat.top,
    }
    return json.dumps(doc, indent=2) + "\n"


# -- operator documents ------------------------------------------------------

def parse_operator(text: str, lat: BoundedLattice) -> UnaryOpTable:
    doc = _load_json(text)
    _require_keys(doc, ("kind",))
    kind = doc["kind"]
    if "preset" in doc:
        mapping = _expand_preset(doc["preset"], lat)
    elif "map" in doc:
        mapping = dict(doc["map"])
        for x, v in mapping.items():
            if x not in lat or v not in lat:
                raise ReferenceToUnknownElement(
                    f"operator map entry {x!r} -> {v!r} references an unknown element"
                )
        for x in lat.elements:
            if x not in mapping:
                raise ParseError(f"operator map is missing element {x!r}")
    else:
        raise ParseError("operator document needs a 'map' or a 'preset'")
    return validate_unary(lat, kind, mapping)


def _expand_preset(preset: str, lat: BoundedLattice) -> dict:
    if preset == "identity":
        return {x: x for x in lat.elements}
    if preset.startswith("join-with:"):
        k = preset.split(":", 1)[1]
        if k not in lat:
            raise ReferenceToUnknownElement(f"preset element {k!r} unknown")
        return {x: lat.join(x, k) for x in lat.elements}
    if preset.startswith("meet-with:"):
        k = preset.split(":", 1)[1]
        if k not in lat:
            raise ReferenceToUnknownElement(f"preset element {k!r} unknown")
        return {x: lat.meet(x, k) for x in lat.elements}
    raise ParseError(f"unknown operator preset {preset!r}")


def serialize_operator(op: UnaryOpTable) -> str:
    doc = {
        "kind": op.kind,
        "map": {x: op.mapping[x] for x in op.lattice.elements},
    }
    return json.dumps(doc, indent=2) + "\n"


# -- binop documents ---------------------------------------------------------

def parse_binop(text: str, lat: BoundedLattice, *, role: str | None = None):
    """Parse a binop document.

    With a "domain" key and a role, returns a certified PartialBinOpTable;
    otherwise a FullBinOpTable over the whole lattice (uncertified).
    """
    doc = _load_json(text)
    _require_keys(doc, ("neutral", "table"))
    neutral = doc["neutral"]
    if neutral not in lat:
        raise ReferenceToUnknownElement(f"neutral {neutral!r} is not a lattice element")
    if "domain" in doc and doc["domain"] is not None:
        dom_doc = doc["domain"]
        _require_keys(dom_doc, ("low", "high"))
        spec = IntervalSpec(dom_doc["low"], dom_doc["high"])
        rows = lat.interval(spec)
    else:
        spec = None
        rows = lat.elements
    table = {}
    raw = doc["table"]
    for x in rows:
        if x not in raw:
            raise ParseError(f"table is missing row {x!r}")
        for y in rows:
            if y not in raw[x]:
                raise ParseError(f"table is missing cell ({x!r}, {y!r})")
            v = raw[x][y]
            if v not in lat:
                raise ReferenceToUnknownElement(
                    f"table cell ({x!r}, {y!r}) = {v!r} references an unknown element"
                )
            table[x, y] = v
    if spec is not None:
        if role is None:
            raise ParseError("a partial binop document needs a role to certify against")
        return validate_partial(lat, spec, role, table)
    return FullBinOpTable(lat, table, neutral=neutral)


def serialize_binop(op) -> str:
    lat = op.lattice
    if isinstance(op, PartialBinOpTable):
        rows = op.domain_elements
        doc = {
            "neutral": op.domain.high if op.role == "tnorm" else op.domain.low,
            "domain": {"low": op.domain.low, "high": op.domain.high},
        }
    else:
        rows = lat.elements
        doc = {"neutral": op.neutral, "domain": None}
    doc["table"] = {x: {y: op(x, y) for y in rows} for x in rows}
    return json.dumps(doc, indent=2) + "\n"


# -- rendering ---------------------------------------------------------------

def render_table(binop: FullBinOpTable, corner: str = "U") -> str:
    """Fixed-width grid with header row/column in declared element order."""
    lat = binop.lattice
    els = lat.elements
    width = max(len(corner), *(len(x) for x in els))
    for x in els:
        for y in els:
            width = max(width, len(binop(x, y)))

    def cell(s):
        return s.rjust(width)

    lines = [" ".join([cell(corner)] + [cell(y) for y in els])]
    lines.append("-" * len(lines[0]))
    for x in els:
        lines.append(" ".join([cell(x)] + [cell(binop(x, y)) for y in els]))
    return "\n".join(lines) + "\n"


def export_dot(lat: BoundedLattice) -> str:
    """Hasse diagram as a DOT digraph, cover edges bottom-to-top."""
    lines = [
        "digraph hasse {",
        "  rankdir=BT;",
        "  node [shape=circle];",
    ]
    for x in lat.elements:
        lines.append(f'  "{x}";')
    for lo, hi in lat.covers:
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
