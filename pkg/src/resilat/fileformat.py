"""JSON algebra files.

Layout::

    {"kind": ..., "elements": [...], "leq": [[lo, hi], ...],
     "ops": {...}, "constants": {...}, "provenance": ...}

Binary tables are row-major nested lists of element names (row = left
argument), unary tables flat lists. ``sections`` maps each base element to
``{member: image}``. ``leq`` holds the covering pairs and is omitted for kinds
whose order is derivable from the operations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .basic import BasicAlgebra, ImplicationReduct, induced_lattice, reduct_order, validate_basic, validate_reduct
from .errors import ParseError, UnknownKind
from .lattice import FiniteLattice, Involution, build_lattice, validate_involution
from .logics import KleeneAlgebra, NelsonAlgebra, build_nelson, check_kleene, validate_nelson
from .residuation import RRLGroupoid, derive_arrow_from_odot, derive_odot_from_arrow, validate_rrl
from .sections import EXTENSIVE, OUTSIDE, SectionedLattice, validate_family

FILE_KINDS = (
    "lattice",
    "sectioned-lattice",
    "rrl-groupoid",
    "basic-algebra",
    "implication-reduct",
    "kleene",
    "nelson",
)


@dataclass(frozen=True)
class AlgebraFile:
    kind: str
    structure: Any
    provenance: Any = None


# parsing

def _require(doc: dict, key: str, where: str = "file"):
    if key not in doc:
        raise ParseError(f"{where} is missing {key!r}", (key,))
    return doc[key]


class _Names:
    def __init__(self, elements):
        if not isinstance(elements, list) or not elements or not all(isinstance(e, str) for e in elements):
            raise ParseError("'elements' must be a non-empty list of strings")
        if len(set(elements)) != len(elements):
            raise ParseError("duplicate element names", tuple(sorted({e for e in elements if elements.count(e) > 1})))
        self.elements = elements
        self.idx = {e: i for i, e in enumerate(elements)}

    def one(self, v, what: str) -> int:
        if not isinstance(v, str) or v not in self.idx:
            raise ParseError(f"{what} refers to undeclared element {v!r}", (str(v),))
        return self.idx[v]

    def unary(self, t, what: str) -> tuple[int, ...]:
        if not isinstance(t, list) or len(t) != len(self.elements):
            raise ParseError(f"{what} must list one image per element")
        return tuple(self.one(v, what) for v in t)

    def binary(self, t, what: str):
        n = len(self.elements)
        if not isinstance(t, list) or len(t) != n or any(not isinstance(r, list) or len(r) != n for r in t):
            raise ParseError(f"{what} must be a {n}x{n} table")
        return tuple(tuple(self.one(v, what) for v in row) for row in t)


def _lattice(doc: dict, names: _Names) -> FiniteLattice:
    pairs = _require(doc, "leq")
    if not isinstance(pairs, list) or any(not isinstance(p, list) or len(p) != 2 for p in pairs):
        raise ParseError("'leq' must be a list of [lower, upper] pairs")
    for lo, hi in pairs:
        names.one(lo, "leq")
        names.one(hi, "leq")
    L = build_lattice(names.elements, [tuple(p) for p in pairs])
    _check_constants(doc, L.elements, {"bottom": L.bottom, "top": L.top})
    return L


def _check_constants(doc: dict, elements, actual: dict) -> None:
    consts = doc.get("constants", {})
    if not isinstance(consts, dict):
        raise ParseError("'constants' must be an object")
    for key, value in consts.items():
        if key not in actual:
            continue
        if value != elements[actual[key]]:
            raise ParseError(f"constant {key}={value!r} but the structure has {elements[actual[key]]!r}", (key,))


def _ops(doc: dict) -> dict:
    ops = doc.get("ops", {})
    if not isinstance(ops, dict):
        raise ParseError("'ops' must be an object")
    return ops


def _sections(L: FiniteLattice, raw, names: _Names):
    if not isinstance(raw, dict):
        raise ParseError("'sections' must map base elements to {member: image} objects")
    maps = []
    for a in range(L.n):
        base = L.name(a)
        sec = raw.get(base)
        if not isinstance(sec, dict):
            raise ParseError(f"no sectional map for base {base!r}", (base,))
        row = [OUTSIDE] * L.n
        for k, v in sec.items():
            x = names.one(k, f"section {base}")
            if not L.leq[a][x]:
                raise ParseError(f"{k!r} is not in the section of {base!r}", (base, k))
            row[x] = names.one(v, f"section {base}")
        missing = [L.name(x) for x in L.up(a) if row[x] == OUTSIDE]
        if missing:
            raise ParseError(f"sectional map for {base!r} undefined at {missing}", (base, *missing))
        maps.append(row)
    for key in raw:
        names.one(key, "sections")
    return maps


def _neg(L: FiniteLattice, ops: dict, names: _Names, required: bool) -> Involution | None:
    if "neg" not in ops:
        if required:
            raise ParseError("ops.neg is required for this kind", ("neg",))
        return None
    return validate_involution(L, names.unary(ops["neg"], "ops.neg"))


def structure_from_doc(doc: dict, kind: str | None = None):
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    kind = kind or _require(doc, "kind")
    if kind not in FILE_KINDS:
        raise UnknownKind(f"unknown kind {kind!r}", (str(kind),))
    names = _Names(_require(doc, "elements"))
    ops = _ops(doc)

    if kind in ("basic-algebra", "implication-reduct"):
        consts = doc.get("constants", {})
        zero = names.one(_require(consts, "zero", "constants"), "constants.zero")
        if kind == "basic-algebra":
            A = validate_basic(
                names.elements,
                names.binary(_require(ops, "oplus", "ops"), "ops.oplus"),
                names.unary(_require(ops, "neg", "ops"), "ops.neg"),
                zero,
            )
            order = induced_lattice(A)
        else:
            A = validate_reduct(names.elements, names.binary(_require(ops, "imp", "ops"), "ops.imp"), zero)
            order = reduct_order(A)
        if "leq" in doc:
            given = _lattice(doc, names)
            if given.leq != order.leq:
                raise ParseError("'leq' disagrees with the order induced by the operations")
        return A

    L = _lattice(doc, names)
    if kind == "lattice":
        t = _neg(L, ops, names, required=False)
        return L if t is None else t
    if kind == "sectioned-lattice":
        F = validate_family(L, _sections(L, _require(ops, "sections", "ops"), names), EXTENSIVE)
        return SectionedLattice(L, _neg(L, ops, names, required=False), F)
    if kind == "rrl-groupoid":
        if "odot" not in ops and "arrow" not in ops:
            raise ParseError("rrl-groupoid needs ops.odot or ops.arrow", ("odot",))
        odot = names.binary(ops["odot"], "ops.odot") if "odot" in ops else None
        arrow = names.binary(ops["arrow"], "ops.arrow") if "arrow" in ops else None
        if odot is None:
            odot = derive_odot_from_arrow(L, arrow)
        if arrow is None:
            arrow = derive_arrow_from_odot(L, odot)
        return validate_rrl(L, odot, arrow)
    K = check_kleene(L, _neg(L, ops, names, required=True))
    if kind == "kleene":
        return K
    if "arrow" in ops:
        return validate_nelson(K, names.binary(ops["arrow"], "ops.arrow"))
    return build_nelson(K)


def parse(text: str, kind: str | None = None) -> AlgebraFile:
    """Parse and validate. ``kind`` overrides the declared kind."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    structure = structure_from_doc(doc, kind)
    return AlgebraFile(kind or doc["kind"], structure, doc.get("provenance"))


# serialization

def _table(names, t):
    return [[names[v] for v in row] for row in t]


def _order_doc(L: FiniteLattice) -> dict:
    return {
        "elements": list(L.elements),
        "leq": [[L.name(x), L.name(y)] for x, y in L.covers()],
    }


def _lattice_consts(L: FiniteLattice) -> dict:
    return {"bottom": L.name(L.bottom), "top": L.name(L.top)}


def to_doc(kind: str, s, provenance=None) -> dict:
    if kind == "basic-algebra":
        names = s.elements
        doc = {
            "elements": list(names),
            "ops": {"oplus": _table(names, s.oplus), "neg": [names[v] for v in s.neg]},
            "constants": {"zero": names[s.zero]},
        }
    elif kind == "implication-reduct":
        names = s.elements
        doc = {"elements": list(names), "ops": {"imp": _table(names, s.imp)}, "constants": {"zero": names[s.zero]}}
    else:
        if kind == "lattice":
            L = s.host if isinstance(s, Involution) else s
        else:
            L = s.lattice
        names = L.elements
        doc = _order_doc(L)
        ops: dict = {}
        if kind == "lattice":
            if isinstance(s, Involution):
                ops["neg"] = [names[v] for v in s.map]
        elif kind == "sectioned-lattice":
            if s.tilde is not None:
                ops["neg"] = [names[v] for v in s.tilde.map]
            ops["sections"] = {
                names[a]: {names[x]: names[s.family.maps[a][x]] for x in L.up(a)} for a in range(L.n)
            }
        elif kind == "rrl-groupoid":
            ops["odot"] = _table(names, s.odot)
            ops["arrow"] = _table(names, s.arrow)
        elif kind == "kleene":
            ops["neg"] = [names[v] for v in s.tilde.map]
        elif kind == "nelson":
            ops["neg"] = [names[v] for v in s.kleene.tilde.map]
            ops["arrow"] = _table(names, s.nelson_arrow)
        else:
            raise UnknownKind(f"unknown kind {kind!r}", (kind,))
        doc["ops"] = ops
        doc["constants"] = _lattice_consts(L)
    out = {"kind": kind, **doc}
    if provenance is not None:
        out["provenance"] = provenance
    return out


def _emit(v, depth: int) -> str:
    """JSON with scalar lists kept on one line, so each table row is one line."""
    pad = "  " * (depth + 1)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_emit(x, depth + 1)}" for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(v, list) and any(isinstance(x, (list, dict)) for x in v):
        return "[\n" + ",\n".join(pad + _emit(x, depth + 1) for x in v) + "\n" + "  " * depth + "]"
    return json.dumps(v, ensure_ascii=False)


def dumps_doc(doc) -> str:
    return _emit(doc, 0) + "\n"


def serialize(f: AlgebraFile) -> str:
    return dumps_doc(to_doc(f.kind, f.structure, f.provenance))


def kind_of(structure) -> str:
    """Natural file kind of an in-memory structure."""
    for cls, kind in (
        (BasicAlgebra, "basic-algebra"),
        (ImplicationReduct, "implication-reduct"),
        (RRLGroupoid, "rrl-groupoid"),
        (SectionedLattice, "sectioned-lattice"),
        (NelsonAlgebra, "nelson"),
        (KleeneAlgebra, "kleene"),
        (FiniteLattice, "lattice"),
        (Involution, "lattice"),
    ):
        if isinstance(structure, cls):
            return kind
    raise UnknownKind(f"no file kind for {type(structure).__name__}")
