"""JSON documents for algebras, relations, sets, crisp relations and operators.

Schemas::

    lattice    {"elements": [str], "leq": [[str, str]], "involution": {str: str}}
    relation   {"universe": [str], "matrix": [[element, ...], ...]}   (row-major)
    fuzzy set  {"values": {point: element}}
    crisp      {"universe": [str], "edges": [[str, str]]}
    axiom      {"S": [word], "T": [word]}                              ("I" = identity)
    operator   {"universe": [str], "singleton_images": {point: {point: element}}}
            or {"universe": [str], "table": [{"input": {...}, "output": {...}}]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .crisp import CrispRelation
from .errors import DmhError, EnumerationTooLarge, ParseError, SchemaError
from .fuzzy import FuzzyRelation, FuzzySet, Universe
from .lattice import DmhAlgebra, make_algebra
from .reconstruction import AbstractOperator, ExtensionalTable, SingletonGenerated


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def _require(doc: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(doc, Mapping):
        raise SchemaError(f"{where} must be a JSON object")
    if key not in doc:
        raise SchemaError(f"{where} is missing {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{where}: {key!r} must be a {kind.__name__}")
    return value


def _str_list(items: Any, where: str) -> list[str]:
    if not isinstance(items, list) or not all(isinstance(e, str) for e in items):
        raise SchemaError(f"{where} must be a list of strings")
    return items


def algebra_from_json(doc: Any, name: str | None = None) -> DmhAlgebra:
    """Build and validate an algebra.  Structural failures raise ``LatticeError``."""
    elements = _str_list(_require(doc, "elements", list, "lattice"), "lattice.elements")
    leq = _require(doc, "leq", list, "lattice")
    for pair in leq:
        if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(e, str) for e in pair):
            raise SchemaError("lattice.leq entries must be [str, str] pairs")
    involution = _require(doc, "involution", dict, "lattice")
    if not all(isinstance(v, str) for v in involution.values()):
        raise SchemaError("lattice.involution values must be strings")
    return make_algebra(elements, leq, involution, name=name or doc.get("name"))


def algebra_to_json(alg: DmhAlgebra) -> dict:
    el = alg.elements
    n = alg.size
    pairs = [[el[i], el[j]] for i in range(n) for j in range(n) if i != j and alg.leq[i][j]]
    return {
        "elements": list(el),
        "leq": pairs,
        "involution": {el[i]: el[alg.neg[i]] for i in range(n)},
    }


def _universe(doc: Any, where: str) -> Universe:
    pts = _str_list(_require(doc, "universe", list, where), f"{where}.universe")
    try:
        return Universe(tuple(pts))
    except ValueError as exc:
        raise SchemaError(f"{where}.universe: {exc}") from None


def relation_from_json(alg: DmhAlgebra, doc: Any) -> FuzzyRelation:
    universe = _universe(doc, "relation")
    matrix = _require(doc, "matrix", list, "relation")
    try:
        return FuzzyRelation.from_matrix(alg, universe, matrix)
    except (ValueError, TypeError, DmhError) as exc:
        raise SchemaError(f"relation.matrix: {exc}") from None


def relation_to_json(r: FuzzyRelation) -> dict:
    return {"universe": list(r.universe.points), "matrix": r.matrix()}


def set_from_json(alg: DmhAlgebra, universe: Universe, doc: Any) -> FuzzySet:
    values = _require(doc, "values", dict, "fuzzy set")
    try:
        return FuzzySet.from_mapping(alg, universe, values)
    except DmhError as exc:
        raise SchemaError(f"fuzzy set: {exc}") from None


def set_to_json(a: FuzzySet) -> dict:
    return {"values": a.as_dict()}


def crisp_from_json(doc: Any) -> CrispRelation:
    universe = _universe(doc, "crisp relation")
    edges = _require(doc, "edges", list, "crisp relation")
    try:
        return CrispRelation.from_edges(universe, edges)
    except DmhError as exc:
        raise SchemaError(f"crisp relation: {exc}") from None


def crisp_to_json(rel: CrispRelation) -> dict:
    return {"universe": list(rel.universe.points), "edges": rel.edges()}


def operator_from_json(alg: DmhAlgebra, doc: Any) -> AbstractOperator:
    universe = _universe(doc, "operator")
    try:
        if "singleton_images" in doc:
            images = _require(doc, "singleton_images", dict, "operator")
            return SingletonGenerated.from_mapping(alg, universe, images)
        rows = _require(doc, "table", list, "operator")
        table = {}
        for entry in rows:
            inp = FuzzySet.from_mapping(alg, universe, _require(entry, "input", dict, "table entry"))
            out = FuzzySet.from_mapping(alg, universe, _require(entry, "output", dict, "table entry"))
            table[inp.values] = out.values
        return ExtensionalTable(alg, universe, table)
    except (SchemaError, EnumerationTooLarge):
        raise
    except DmhError as exc:
        raise SchemaError(f"operator: {exc}") from None
