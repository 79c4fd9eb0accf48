"""Exhaustive verification of property/operator-law correspondences."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .approx import IDENTITY, OperatorWord, word_values
from .errors import UnsupportedKind
from .fuzzy import (
    SET_CAP,
    FuzzyRelation,
    FuzzySet,
    Universe,
    all_relations,
    check_cap,
    set_count,
)
from .lattice import DmhAlgebra
from .relations import PropertyKind, holds

LE = "le"
EQ = "eq"


@dataclass(frozen=True)
class OperatorLaw:
    """``lhs(A) <= rhs(A)`` (or ``=``) for every fuzzy set A."""

    lhs: OperatorWord
    rhs: OperatorWord
    relation: str = LE

    def __post_init__(self) -> None:
        if self.relation not in (LE, EQ):
            raise ValueError(f"law relation must be 'le' or 'eq', got {self.relation!r}")

    @classmethod
    def parse(cls, text: str) -> OperatorLaw:
        """Parse ``"L<=U"``, ``"UU = U"`` or ``"I<=LU"``."""
        m = re.fullmatch(r"\s*([LUIlui]*)\s*(<=|=)\s*([LUIlui]*)\s*", text)
        if not m:
            raise ValueError(f"cannot parse law {text!r}")
        rel = LE if m.group(2) == "<=" else EQ
        return cls(OperatorWord.parse(m.group(1)), OperatorWord.parse(m.group(3)), rel)

    def dual(self) -> OperatorLaw:
        """``s <= t`` for all A iff ``t* <= s*`` for all A, with L and U swapped."""
        if self.relation == EQ:
            return OperatorLaw(self.lhs.dual(), self.rhs.dual(), EQ)
        return OperatorLaw(self.rhs.dual(), self.lhs.dual(), LE)

    def __str__(self) -> str:
        return f"{self.lhs}{'<=' if self.relation == LE else '='}{self.rhs}"


@dataclass(frozen=True)
class LawReport:
    law: OperatorLaw
    holds_for_all: bool
    counterexample: FuzzySet | None = None
    lhs_value: FuzzySet | None = None
    rhs_value: FuzzySet | None = None
    sets_checked: int = 0

    def to_json(self) -> dict:
        out: dict = {
            "law": str(self.law),
            "holds_for_all": self.holds_for_all,
            "sets_checked": self.sets_checked,
        }
        if self.counterexample is not None:
            out["counterexample"] = {
                "A": self.counterexample.as_dict(),
                "lhs": self.lhs_value.as_dict(),
                "rhs": self.rhs_value.as_dict(),
            }
        return out


def _first_violation(r: FuzzyRelation, law: OperatorLaw):
    alg, rows = r.algebra, r.rows
    leq = alg.leq
    ll, rl = law.lhs.letters, law.rhs.letters
    count = 0
    for vals in product(range(alg.size), repeat=len(r.universe)):
        count += 1
        a = word_values(alg, rows, ll, vals)
        b = word_values(alg, rows, rl, vals)
        if law.relation == EQ:
            ok = a == b
        else:
            ok = all(leq[p][q] for p, q in zip(a, b))
        if not ok:
            return count, vals, a, b
    return count, None, None, None


def law_holds(r: FuzzyRelation, law: OperatorLaw | str) -> LawReport:
    """Evaluate ``law`` on every fuzzy set; the first violator is returned."""
    if isinstance(law, str):
        law = OperatorLaw.parse(law)
    check_cap(set_count(r.algebra, r.universe), SET_CAP, "law check")
    count, vals, a, b = _first_violation(r, law)
    if vals is None:
        return LawReport(law, True, sets_checked=count)
    alg, u = r.algebra, r.universe
    return LawReport(
        law,
        False,
        FuzzySet(alg, u, vals),
        FuzzySet(alg, u, a),
        FuzzySet(alg, u, b),
        sets_checked=count,
    )


def law_ok(r: FuzzyRelation, law: OperatorLaw) -> bool:
    return _first_violation(r, law)[1] is None


def _w(text: str) -> OperatorWord:
    return OperatorWord.parse(text)


# (upper-form law, lower-form dual law) per proposition
PAIRED_LAWS: dict[PropertyKind, tuple[OperatorLaw, OperatorLaw]] = {
    PropertyKind.REFLEXIVE: (OperatorLaw(IDENTITY, _w("U")), OperatorLaw(_w("L"), IDENTITY)),
    PropertyKind.SYMMETRIC_DM: (OperatorLaw(IDENTITY, _w("LU")), OperatorLaw(_w("UL"), IDENTITY)),
    PropertyKind.TRANSITIVE: (OperatorLaw(_w("UU"), _w("U")), OperatorLaw(_w("L"), _w("LL"))),
    PropertyKind.MEDIATE: (OperatorLaw(_w("U"), _w("UU")), OperatorLaw(_w("LL"), _w("L"))),
    PropertyKind.EUCLIDEAN: (OperatorLaw(_w("U"), _w("LU")), OperatorLaw(_w("UL"), _w("L"))),
    PropertyKind.ADJOINT: (OperatorLaw(_w("U"), _w("UL")), OperatorLaw(_w("LU"), _w("L"))),
    PropertyKind.FUNCTIONAL: (OperatorLaw(_w("U"), _w("L")), OperatorLaw(_w("U"), _w("L"))),
}

CORRESPONDENCE_KINDS = tuple(PAIRED_LAWS)

SERIALITY_LAW = OperatorLaw(_w("L"), _w("U"))


def paired_laws(kind: PropertyKind | str) -> tuple[OperatorLaw, OperatorLaw]:
    kind = PropertyKind.parse(kind)
    if kind not in PAIRED_LAWS:
        raise UnsupportedKind(f"no correspondence proposition for {kind.value}")
    return PAIRED_LAWS[kind]


def correspondence_verified(r: FuzzyRelation, kind: PropertyKind | str) -> bool:
    """True iff the property and both of its operator laws agree on ``r``."""
    kind = PropertyKind.parse(kind)
    up, down = paired_laws(kind)
    check_cap(set_count(r.algebra, r.universe), SET_CAP, "law check")
    prop = holds(r, kind)
    return prop == law_ok(r, up) == law_ok(r, down)


@dataclass
class KindTally:
    relations_checked: int = 0
    agreements: int = 0
    disagreements: int = 0
    dual_mismatches: int = 0
    property_true: int = 0
    first_disagreement: FuzzyRelation | None = None

    def to_json(self) -> dict:
        out = {
            "relations_checked": self.relations_checked,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "dual_mismatches": self.dual_mismatches,
            "property_true": self.property_true,
        }
        if self.first_disagreement is not None:
            out["first_disagreement"] = self.first_disagreement.matrix()
        return out


@dataclass
class SweepReport:
    algebra: str
    universe_size: int
    tallies: dict[PropertyKind, KindTally] = field(default_factory=dict)

    @property
    def disagreements(self) -> int:
        return sum(t.disagreements + t.dual_mismatches for t in self.tallies.values())

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "universe_size": self.universe_size,
            "kinds": {k.value: t.to_json() for k, t in self.tallies.items()},
            "total_disagreements": self.disagreements,
        }


def sweep(
    alg: DmhAlgebra, universe: Universe | int, kinds: Iterable[PropertyKind | str] = CORRESPONDENCE_KINDS
) -> SweepReport:
    """Check every correspondence proposition on every relation over ``(alg, universe)``."""
    if isinstance(universe, int):
        universe = Universe.of(universe)
    kinds = [PropertyKind.parse(k) for k in kinds]
    for k in kinds:
        paired_laws(k)
    check_cap(set_count(alg, universe), SET_CAP, "law check")
    report = SweepReport(alg.name or "custom", len(universe), {k: KindTally() for k in kinds})
    for r in all_relations(alg, universe):
        for k in kinds:
            up, down = PAIRED_LAWS[k]
            prop = holds(r, k)
            u_ok, l_ok = law_ok(r, up), law_ok(r, down)
            t = report.tallies[k]
            t.relations_checked += 1
            t.property_true += prop
            if u_ok != l_ok:
                t.dual_mismatches += 1
            if prop == u_ok == l_ok:
                t.agreements += 1
            else:
                t.disagreements += 1
                if t.first_disagreement is None:
                    t.first_disagreement = r
    return report


Predicate = Callable[[FuzzyRelation], bool]


def property_predicate(kind: PropertyKind | str) -> Predicate:
    kind = PropertyKind.parse(kind)
    return lambda r: holds(r, kind)


def law_predicate(law: OperatorLaw | str) -> Predicate:
    if isinstance(law, str):
        law = OperatorLaw.parse(law)
    return lambda r: law_ok(r, law)


def parse_predicate(text: str) -> Predicate:
    """A property kind name, or a law such as ``"L<=U"``."""
    if "=" in text:
        return law_predicate(text)
    return property_predicate(text)


def search_counterexample(
    alg: DmhAlgebra,
    universe_size: int,
    left: Predicate | str,
    right: Predicate | str,
) -> FuzzyRelation | None:
    """First relation (lexicographic) on which the two predicates disagree."""
    if not 1 <= universe_size <= 3:
        raise ValueError("universe_size must be 1, 2 or 3")
    if isinstance(left, str):
        left = parse_predicate(left)
    if isinstance(right, str):
        right = parse_predicate(right)
    universe = Universe.of(universe_size)
    check_cap(set_count(alg, universe), SET_CAP, "law check")
    for r in all_relations(alg, universe):
        if left(r) != right(r):
            return r
    return None
