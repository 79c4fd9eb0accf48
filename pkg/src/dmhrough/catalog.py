"""Stored worked examples: inputs plus expected outputs, recomputed on demand."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import approx, crisp
from .correspondence import SERIALITY_LAW, law_holds
from .errors import UnknownExample
from .fuzzy import FuzzyRelation, FuzzySet, Universe, all_sets, bottom_set, singleton
from .lattice import standard_algebra
from .relations import check_property

XY = Universe(("x", "y"))


def serial1_relation(algebra: str = "m2_fix") -> FuzzyRelation:
    return FuzzyRelation.from_matrix(standard_algebra(algebra), XY, [["a", "b"], ["b", "a"]])


def serial1_set(algebra: str = "m2_fix") -> FuzzySet:
    return FuzzySet.from_mapping(standard_algebra(algebra), XY, {"x": "b", "y": "a"})


def seriality_gap_relation() -> FuzzyRelation:
    return FuzzyRelation.from_matrix(standard_algebra("m2_fix"), XY, [["a", "a"], ["b", "b"]])


def chain3_symm_relation() -> FuzzyRelation:
    return FuzzyRelation.from_matrix(standard_algebra("chain3"), XY, [["0", "u"], ["u", "1"]])


def m2_swap_symm_relation() -> FuzzyRelation:
    return FuzzyRelation.from_matrix(standard_algebra("m2_swap"), XY, [["0", "a"], ["b", "1"]])


def figure1_relation() -> crisp.CrispRelation:
    u = Universe(("1", "2", "3", "4"))
    return crisp.CrispRelation.from_successors(
        u, {"1": ["4"], "2": ["2", "3"], "3": ["1", "2"], "4": ["4"]}
    )


def serial_not_transitive_relation() -> crisp.CrispRelation:
    u = Universe(("a", "b", "c"))
    return crisp.CrispRelation.from_edges(u, [("a", "b"), ("b", "b"), ("c", "a"), ("c", "c")])


def _serial1() -> dict[str, Any]:
    r, a = serial1_relation(), serial1_set()
    lo, up, lo_res = approx.lower(r, a), approx.upper(r, a), approx.lower_residuated(r, a)
    return {
        "serial": check_property(r, "serial").holds,
        "serial_pointed": check_property(r, "serial_pointed").holds,
        "L(A)(x)": lo["x"],
        "U(A)(x)": up["x"],
        "L*(A)(x)": lo_res["x"],
        "L(A) <= U(A)": lo <= up,
        "L*(A) <= U(A)": lo_res <= up,
    }


def _serial_not_one() -> dict[str, Any]:
    r = serial1_relation("m2_swap")
    return {
        "serial": check_property(r, "serial").holds,
        "serial_pointed": check_property(r, "serial_pointed").holds,
        "forall A: L(A) <= U(A)": law_holds(r, SERIALITY_LAW).holds_for_all,
        "forall A: L*(A) = L(A)": all(
            approx.lower_residuated(r, a) == approx.lower(r, a)
            for a in all_sets(r.algebra, r.universe)
        ),
    }


def _symm(r: FuzzyRelation) -> dict[str, Any]:
    dm = check_property(r, "symmetric_dm")
    return {
        "symmetric_classical": check_property(r, "symmetric_classical").holds,
        "symmetric_dm": dm.holds,
        "symmetric_dm_witness": list(dm.witness.points) if dm.witness else None,
        "R(x,y)' | R(y,x)": r.algebra.element(r.algebra.arrow(r.algebra.index(r("x", "y")), r.algebra.index(r("y", "x")))),
    }


def _seriality_gap() -> dict[str, Any]:
    r = seriality_gap_relation()
    alg = r.algebra
    zero = bottom_set(alg, XY)
    law = law_holds(r, SERIALITY_LAW)
    out: dict[str, Any] = {
        "L(0)(x)": approx.lower(r, zero)["x"],
        "U(0)": approx.upper(r, zero).as_dict(),
        "serial_singleton": check_property(r, "serial_singleton").holds,
        "forall A: L(A) <= U(A)": law.holds_for_all,
        "first counterexample A": law.counterexample.as_dict() if law.counterexample else None,
    }
    for p in XY.points:
        ip = singleton(alg, XY, p)
        out[f"U(I_{p})"] = approx.upper(r, ip).as_dict()
        out[f"L(I_{p})"] = approx.lower(r, ip).as_dict()
    return out


def _alliance_figure1() -> dict[str, Any]:
    rel = figure1_relation()
    x = crisp.CrispSet.of(rel.universe, ["3", "4"])
    up = crisp.crisp_approx(rel, x, "UPPER")
    lo_up = crisp.crisp_approx(rel, up, "LOWER")
    first = crisp.alliance_set_law_violation(rel)
    return {
        "X^R": list(up.members()),
        "(X^R)_R": list(lo_up.members()),
        "(X^R)_R <= X^R": lo_up <= up,
        "positive_alliance": crisp.crisp_property(rel, "positive_alliance").holds,
        "singleton condition": crisp.alliance_singleton_check(rel),
        "first X violating (X^R)_R <= X^R": list(first.members()) if first else None,
    }


def _alliance_serial_not_transitive() -> dict[str, Any]:
    rel = serial_not_transitive_relation()
    trans = crisp.crisp_property(rel, "transitive")
    return {
        "serial": crisp.crisp_property(rel, "serial").holds,
        "transitive": trans.holds,
        "transitive_witness": list(trans.witness.points) if trans.witness else None,
        "positive_alliance": crisp.crisp_property(rel, "positive_alliance").holds,
    }


@dataclass(frozen=True)
class Example:
    compute: Callable[[], dict[str, Any]]
    expected: dict[str, Any]
    note: str = ""


EXAMPLES: dict[str, Example] = {
    "serial1": Example(
        _serial1,
        {
            "serial": True,
            "serial_pointed": False,
            "L(A)(x)": "1",
            "U(A)(x)": "0",
            "L*(A)(x)": "0",
            "L(A) <= U(A)": False,
            "L*(A) <= U(A)": True,
        },
    ),
    "serial_not_one": Example(
        _serial_not_one,
        {
            "serial": True,
            "serial_pointed": False,
            "forall A: L(A) <= U(A)": True,
            "forall A: L*(A) = L(A)": True,
        },
    ),
    "chain3_symm": Example(
        lambda: _symm(chain3_symm_relation()),
        {
            "symmetric_classical": True,
            "symmetric_dm": False,
            "symmetric_dm_witness": ["x", "y"],
            "R(x,y)' | R(y,x)": "u",
        },
    ),
    "m2_swap_symm": Example(
        lambda: _symm(m2_swap_symm_relation()),
        {
            "symmetric_classical": False,
            "symmetric_dm": False,
            "symmetric_dm_witness": ["x", "y"],
            "R(x,y)' | R(y,x)": "b",
        },
        note="direct evaluation: a' | b = b | b = b, so the De Morgan symmetry condition fails at (x, y)",
    ),
    "seriality2_gap": Example(
        _seriality_gap,
        {
            "L(0)(x)": "a",
            "U(0)": {"x": "0", "y": "0"},
            "serial_singleton": True,
            "forall A: L(A) <= U(A)": False,
            "first counterexample A": {"x": "0", "y": "0"},
            "U(I_x)": {"x": "a", "y": "b"},
            "L(I_x)": {"x": "a", "y": "b"},
            "U(I_y)": {"x": "a", "y": "b"},
            "L(I_y)": {"x": "a", "y": "b"},
        },
    ),
    "alliance_figure1": Example(
        _alliance_figure1,
        {
            "X^R": ["1", "2", "4"],
            "(X^R)_R": ["1", "3", "4"],
            "(X^R)_R <= X^R": False,
            "positive_alliance": True,
            "singleton condition": True,
            "first X violating (X^R)_R <= X^R": ["3", "4"],
        },
    ),
    "alliance_serial_not_transitive": Example(
        _alliance_serial_not_transitive,
        {
            "serial": True,
            "transitive": False,
            "transitive_witness": ["c", "a", "b"],
            "positive_alliance": True,
        },
    ),
}

EXAMPLE_IDS = tuple(EXAMPLES)


def reproduce(example_id: str) -> dict[str, Any]:
    try:
        ex = EXAMPLES[example_id]
    except KeyError:
        raise UnknownExample(
            f"unknown example {example_id!r}; known: {', '.join(EXAMPLE_IDS)}"
        ) from None
    actual = ex.compute()
    mismatches = sorted(k for k in set(ex.expected) | set(actual) if ex.expected.get(k) != actual.get(k))
    out: dict[str, Any] = {
        "example": example_id,
        "match": not mismatches,
        "expected": ex.expected,
        "actual": actual,
        "mismatches": mismatches,
    }
    if ex.note:
        out["note"] = ex.note
    return out
