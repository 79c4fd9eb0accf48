"""Command-line front end.  Every command prints line-delimited JSON.

Exit codes: 0 holds / success, 1 property or law fails, 2 usage, input or cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import crisp, io
from .approx import OperatorWord
from .catalog import EXAMPLE_IDS, reproduce
from .correspondence import (
    CORRESPONDENCE_KINDS,
    OperatorLaw,
    law_holds,
    paired_laws,
    search_counterexample,
    sweep,
)
from .errors import DmhError, LatticeError
from .lattice import DmhAlgebra, invariant_violations, standard_algebra
from .reconstruction import (
    AxiomSpec,
    base_axiom_holds,
    characterized_axiom_holds,
    dual_axiom_holds,
    represents_upper,
    single_axiom_equation_holds,
)
from .relations import PropertyKind, check_property, holds

OK, FAILS, BAD_INPUT = 0, 1, 2


class UsageError(DmhError, ValueError):
    pass


def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(obj, dict) and obj:
        rows = []
        for k, v in obj.items():
            rows.extend(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return rows
    return [(prefix, json.dumps(obj))]


def emit(obj: Any, pretty: bool) -> None:
    if not pretty:
        print(json.dumps(obj, ensure_ascii=False))
        return
    rows = _flatten(obj)
    width = max((len(k) for k, _ in rows), default=0)
    for k, v in rows:
        print(f"{k.ljust(width)}  {v}")
    print()


def _algebra(args: argparse.Namespace) -> DmhAlgebra:
    if getattr(args, "lattice", None):
        return io.algebra_from_json(io.load_json(args.lattice), name=args.lattice)
    if getattr(args, "algebra", None):
        return standard_algebra(args.algebra)
    raise UsageError("one of --lattice FILE or --algebra NAME is required")


def _relation(args: argparse.Namespace, alg: DmhAlgebra):
    if not args.relation:
        raise UsageError("--relation FILE is required")
    return io.relation_from_json(alg, io.load_json(args.relation))


def cmd_check_lattice(args: argparse.Namespace) -> int:
    doc = io.load_json(args.file)
    try:
        alg = io.algebra_from_json(doc, name=args.file)
    except LatticeError as exc:
        emit({"valid": False, "error": type(exc).__name__, "reason": str(exc)}, args.pretty)
        return FAILS
    problems = invariant_violations(alg)
    emit(
        {"valid": not problems, "size": alg.size, "elements": list(alg.elements), "violations": problems},
        args.pretty,
    )
    return FAILS if problems else OK


def cmd_check(args: argparse.Namespace) -> int:
    kind = PropertyKind.parse(args.property)
    if args.crisp:
        report = crisp.crisp_property(crisp_rel := io.crisp_from_json(io.load_json(args.crisp)), kind)
        out = report.to_json()
        out["universe"] = list(crisp_rel.universe.points)
    else:
        alg = _algebra(args)
        report = check_property(_relation(args, alg), kind)
        out = report.to_json()
    emit(out, args.pretty)
    return OK if report.holds else FAILS


def _parse_law(lhs: str, rhs: str, rel: str) -> OperatorLaw:
    return OperatorLaw(OperatorWord.parse(lhs), OperatorWord.parse(rhs), rel)


def cmd_law(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    r = _relation(args, alg)
    report = law_holds(r, _parse_law(args.lhs, args.rhs, args.rel))
    emit(report.to_json(), args.pretty)
    return OK if report.holds_for_all else FAILS


def cmd_correspondence(args: argparse.Namespace) -> int:
    kind = PropertyKind.parse(args.property)
    if args.relation:
        alg = _algebra(args)
        r = _relation(args, alg)
        up, down = paired_laws(kind)
        prop = holds(r, kind)
        u, d = law_holds(r, up), law_holds(r, down)
        agree = prop == u.holds_for_all == d.holds_for_all
        emit(
            {
                "kind": kind.value,
                "property": prop,
                "upper_law": u.to_json(),
                "lower_law": d.to_json(),
                "agree": agree,
            },
            args.pretty,
        )
        return OK if agree else FAILS
    alg = standard_algebra(args.algebra or "m2_fix")
    report = sweep(alg, args.n, [kind]).to_json()
    emit(report, args.pretty)
    return OK if report["total_disagreements"] == 0 else FAILS


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.crisp:
        kinds = args.kinds or [k.value for k in crisp.CORRESPONDENCE_KINDS]
        report = crisp.crisp_sweep(args.n, kinds)
    else:
        kinds = args.kinds or [k.value for k in CORRESPONDENCE_KINDS]
        report = sweep(standard_algebra(args.algebra), args.n, kinds).to_json()
    emit(report, args.pretty)
    return OK if report["total_disagreements"] == 0 else FAILS


def cmd_search(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    r = search_counterexample(alg, args.n, args.left, args.right)
    out: dict[str, Any] = {"left": args.left, "right": args.right, "algebra": alg.name, "universe_size": args.n}
    if r is None:
        out["found"] = False
        emit(out, args.pretty)
        return OK
    out["found"] = True
    out["relation"] = io.relation_to_json(r)
    emit(out, args.pretty)
    return FAILS


def cmd_reconstruct(args: argparse.Namespace) -> int:
    alg = _algebra(args)
    op = io.operator_from_json(alg, io.load_json(args.operator))
    spec = AxiomSpec.from_json(io.load_json(args.axiom))
    r = represents_upper(op)
    characterized = characterized_axiom_holds(op, spec)
    out = {
        "axiom": spec.to_json(),
        "base_axiom": base_axiom_holds(op),
        "represents_upper": r is not None,
        "relation": io.relation_to_json(r) if r is not None else None,
        "characterized": characterized,
        "dual_form": dual_axiom_holds(op, spec),
        "literal_equation": single_axiom_equation_holds(op, spec),
    }
    emit(out, args.pretty)
    return OK if characterized else FAILS


def cmd_reproduce(args: argparse.Namespace) -> int:
    ids = EXAMPLE_IDS if args.id == "all" else (args.id,)
    status = OK
    for ex in ids:
        out = reproduce(ex)
        emit(out, args.pretty)
        if not out["match"]:
            status = FAILS
    return status


def _add_algebra_args(p: argparse.ArgumentParser, relation: bool = True) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--lattice", metavar="FILE", help="algebra as a JSON lattice document")
    src.add_argument("--algebra", metavar="NAME", help="built-in algebra (bool2, chain3, m2_fix, m2_swap, chainK)")
    if relation:
        p.add_argument("--relation", metavar="FILE", help="fuzzy relation JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dmhrough", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="render key/value tables instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-lattice", help="validate a lattice document")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_lattice)

    p = sub.add_parser("check", help="check one relation property")
    p.add_argument("property")
    _add_algebra_args(p)
    p.add_argument("--crisp", metavar="FILE", help="crisp relation JSON instead of a fuzzy one")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("law", help="check an operator law lhs(A) <= rhs(A) on every A")
    p.add_argument("--lhs", required=True, metavar="WORD")
    p.add_argument("--rhs", required=True, metavar="WORD")
    p.add_argument("--rel", choices=("le", "eq"), default="le")
    _add_algebra_args(p)
    p.set_defaults(func=cmd_law)

    p = sub.add_parser("correspondence", help="property vs its paired operator laws")
    p.add_argument("property", nargs="?")
    p.add_argument("--property", dest="property_opt", metavar="KIND")
    _add_algebra_args(p)
    p.add_argument("--n", "--universe", dest="n", type=int, default=2)
    p.set_defaults(func=cmd_correspondence)

    p = sub.add_parser("sweep", help="exhaustive correspondence sweep")
    p.add_argument("--algebra", default="m2_fix", metavar="NAME")
    p.add_argument("--n", "--universe", dest="n", type=int, required=True)
    p.add_argument("--kinds", nargs="+", metavar="KIND")
    p.add_argument("--crisp", action="store_true", help="sweep crisp relations instead")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("search", help="first relation where two predicates disagree")
    p.add_argument("--left", required=True, metavar="PRED")
    p.add_argument("--right", required=True, metavar="PRED")
    _add_algebra_args(p, relation=False)
    p.add_argument("--n", "--universe", dest="n", type=int, default=2)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reconstruct", help="test an abstract operator against an axiom spec")
    p.add_argument("--operator", required=True, metavar="FILE")
    p.add_argument("--axiom", required=True, metavar="FILE")
    _add_algebra_args(p, relation=False)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("reproduce", help="recompute a stored worked example")
    p.add_argument("id", choices=(*EXAMPLE_IDS, "all"))
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    if args.command == "correspondence":
        args.property = args.property_opt or args.property
        if not args.property:
            print("dmhrough: correspondence needs a PROPERTY", file=sys.stderr)
            return BAD_INPUT
    try:
        return args.func(args)
    except (DmhError, ValueError) as exc:
        kind = type(exc).__name__
        msg = str(exc.args[0]) if exc.args else kind
        emit({"error": kind, "message": msg}, args.pretty)
        print(f"dmhrough: {kind}: {msg}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
